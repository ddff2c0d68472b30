//! Group families: (Z/n)², H_[4], affine quotients of wallpaper groups, small metacyclic
//! groups, direct products, multiplication tables and the catalogue.

mod ab2;
mod affine;
mod catalogue;
mod h4;
mod small;
mod table;

pub use ab2::{abelian_rank2, Ab2};
pub use affine::{wallpaper_quotient, wallpaper_quotient_with, Affine2, WallpaperAction};
pub use catalogue::{build_catalogue_group, catalogue, catalogue_entries, CatalogueEntry};
pub use h4::{build_h4, H4Elem, H4};
pub use small::{Cyclic, Metacyclic, Product};
pub use table::TableGroup;

/// Split `s` on `sep` at bracket depth zero.
pub(crate) fn split_top(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' | '[' | '<' | '{' => depth += 1,
            ')' | ']' | '>' | '}' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(&s[start..i]);
                start = i + ch.len_utf8();
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

/// Parse `(n1,n2,…)` of signed integers.
pub(crate) fn parse_int_tuple(s: &str) -> Option<Vec<i64>> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = t.strip_prefix('(')?.strip_suffix(')')?;
    inner.split(',').map(|x| x.parse().ok()).collect()
}
