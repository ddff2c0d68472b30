use serde::Serialize;

use super::{Affine2, Cyclic, Metacyclic, Product, TableGroup};
use crate::arith::{inv_mod, is_prime};
use crate::descriptor::GroupDescriptor;
use crate::error::{Error, Result};
use crate::matrix::{companion, mult_order_element, Mat2, Sl2};
use crate::perm::{Alt, Sym};

/// A nonabelian group the catalogue can build, by identifier and order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogueEntry {
    pub id: String,
    pub order: usize,
}

const NAMED: [(&str, usize); 5] = [("A4", 12), ("S4", 24), ("SL(2,3)", 24), ("A5", 60), ("SL(2,5)", 120)];

fn semidirect_bases(max_order: usize) -> Vec<(String, usize)> {
    let mut out = Vec::new();
    for p in (3..).filter(|&p| is_prime(p)).take_while(|&p| p * p * 2 <= max_order as u64) {
        for q in (2..p * p).filter(|&q| is_prime(q) && q != p && (p * p - 1) % q == 0) {
            let order = (p * p * q) as usize;
            if order > max_order {
                continue;
            }
            let mut variants = vec![];
            if (p - 1) % q == 0 {
                variants.push("scal");
                if q > 2 {
                    variants.push("inv");
                }
                variants.push("line");
            } else {
                variants.push("irr");
            }
            for v in variants {
                out.push((format!("Z{p}^2:C{q}.{v}"), order));
            }
        }
    }
    out
}

/// Deterministic list of the constructible nonabelian groups of order at most `max_order`:
/// dihedral, dicyclic, `A4`, `S4`, `A5`, `SL(2,3)`, `SL(2,5)`, their products with `C2..C6`,
/// and some `(Z/p)² ⋊ Z/q`. Far from every group of each order.
pub fn catalogue_entries(max_order: usize) -> Vec<CatalogueEntry> {
    let mut bases: Vec<(String, usize)> = Vec::new();
    for n in 3..=max_order / 2 {
        bases.push((format!("D{n}"), 2 * n));
    }
    for n in 2..=max_order / 4 {
        bases.push((format!("Dic{n}"), 4 * n));
    }
    for (id, o) in NAMED {
        if o <= max_order {
            bases.push((id.to_string(), o));
        }
    }
    bases.extend(semidirect_bases(max_order));
    let mut all = bases.clone();
    for (id, o) in &bases {
        for k in 2..=6 {
            if o * k <= max_order {
                all.push((format!("{id}xC{k}"), o * k));
            }
        }
    }
    let mut out: Vec<CatalogueEntry> = all.into_iter().map(|(id, order)| CatalogueEntry { id, order }).collect();
    out.sort_by(|a, b| (a.order, &a.id).cmp(&(b.order, &b.id)));
    out
}

pub fn catalogue(max_order: usize) -> Vec<GroupDescriptor> {
    catalogue_entries(max_order).into_iter().map(|e| GroupDescriptor::Catalogue { id: e.id }).collect()
}

fn tab<G: crate::group::FiniteGroup>(g: &G, id: &str, cap: usize) -> Result<TableGroup> {
    let (t, _) = TableGroup::from_group(g, cap)?;
    Ok(t.with_descriptor(GroupDescriptor::Catalogue { id: id.to_string() }))
}

fn num(s: &str) -> Result<u32> {
    s.parse().map_err(|_| Error::InvalidParameter(format!("bad number {s:?} in catalogue id")))
}

fn semidirect(p: u32, q: u32, variant: &str, id: &str) -> Result<Affine2> {
    if !is_prime(p as u64) || !is_prime(q as u64) || p == q && variant != "heis" {
        return Err(Error::InvalidParameter(format!("{id}: p and q must be distinct primes")));
    }
    let m: [i64; 4] = match variant {
        "scal" | "inv" | "line" => {
            let l = mult_order_element(p, q)? as i64;
            let li = inv_mod(l as u64, p as u64).unwrap() as i64;
            match variant {
                "scal" => [l, 0, 0, l],
                "inv" => [l, 0, 0, li],
                _ => [l, 0, 0, 1],
            }
        }
        "irr" => {
            if !(p + 1).is_multiple_of(q) || q == 2 {
                return Err(Error::InvalidParameter(format!("{id}: irreducible action needs q | p+1, q odd")));
            }
            let k = (0..p)
                .find(|&k| companion(p, k).order(p) == q as u64)
                .ok_or_else(|| Error::NotFound(format!("{id}: no companion matrix of order {q}")))?;
            let c: Mat2 = companion(p, k);
            [c.a as i64, c.b as i64, c.c as i64, c.d as i64]
        }
        // the Heisenberg group of order p³ as (Z/p)² ⋊ Z/p with a unipotent action
        "heis" if p == q => [1, 1, 0, 1],
        _ => return Err(Error::InvalidParameter(format!("{id}: unknown action {variant:?}"))),
    };
    Affine2::with_matrix(q, p, m, id)
}

/// Build a catalogue group (or any group with a well-formed catalogue identifier) as a table.
pub fn build_catalogue_group(id: &str, cap: usize) -> Result<TableGroup> {
    let id = id.trim();
    if let Some(pos) = id.rfind("xC") {
        let (base, k) = (&id[..pos], &id[pos + 2..]);
        let k = num(k)?;
        let b = build_catalogue_group(base, cap)?;
        return tab(&Product::new(b, Cyclic::new(k)?, id), id, cap);
    }
    if let Some(k) = id.strip_prefix('C').filter(|k| k.chars().all(|c| c.is_ascii_digit()) && !k.is_empty()) {
        return tab(&Cyclic::new(num(k)?)?, id, cap);
    }
    match id {
        "A4" => return tab(&Alt::new(4)?, id, cap),
        "S4" => return tab(&Sym::new(4)?, id, cap),
        "A5" => return tab(&Alt::new(5)?, id, cap),
        "SL(2,3)" => return tab(&Sl2::new(3)?, id, cap),
        "SL(2,5)" => return tab(&Sl2::new(5)?, id, cap),
        "Q8" => return tab(&Metacyclic::dicyclic(2)?, id, cap),
        _ => {}
    }
    if let Some(n) = id.strip_prefix("Dic") {
        let n = num(n)?;
        if n < 2 {
            return Err(Error::InvalidParameter("Dic needs n ≥ 2".into()));
        }
        return tab(&Metacyclic::dicyclic(n)?, id, cap);
    }
    if let Some(n) = id.strip_prefix('D') {
        let n = num(n)?;
        if n < 3 {
            return Err(Error::InvalidParameter("D needs n ≥ 3".into()));
        }
        return tab(&Metacyclic::dihedral(n)?, id, cap);
    }
    if let Some(rest) = id.strip_prefix('Z') {
        // Z{p}^2:C{q}.{variant}
        let parsed = rest.split_once("^2:C").and_then(|(p, r)| r.split_once('.').map(|(q, v)| (p, q, v)));
        if let Some((p, q, v)) = parsed {
            let g = semidirect(num(p)?, num(q)?, v, id)?;
            return tab(&g, id, cap);
        }
    }
    Err(Error::InvalidParameter(format!("unknown catalogue id {id:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_catalogues() {
        let ids = |m| catalogue_entries(m).into_iter().map(|e| e.id).collect::<Vec<_>>();
        assert!(ids(8).contains(&"D4".to_string()));
        assert!(ids(8).contains(&"Dic2".to_string()));
        assert!(ids(12).contains(&"A4".to_string()));
        assert!(ids(60).contains(&"A5".to_string()));
        assert_eq!(catalogue(100), catalogue(100));
    }

    #[test]
    fn everything_builds_with_the_right_order() {
        for e in catalogue_entries(200) {
            let g = build_catalogue_group(&e.id, 10_000).unwrap();
            assert_eq!(g.size(), e.order, "{}", e.id);
            assert!(!g.is_abelian(), "{}", e.id);
        }
        assert_eq!(build_catalogue_group("Z5^2:C5.heis", 1000).unwrap().size(), 125);
        assert!(build_catalogue_group("nope", 10).is_err());
    }
}
