use num_bigint::BigUint;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::parse_int_tuple;
use crate::descriptor::GroupDescriptor;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Which integer matrix the rotation `r` of the `d = 4` quotient uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum WallpaperAction {
    /// The planar 90° rotation: `x → y`, `y → x⁻¹`.
    #[default]
    Geometric,
    /// `x → y`, `y → y⁻¹`, as the relation is sometimes written. Not invertible; rejected.
    Printed,
}

/// `(Z/m)² ⋊ Z/d` with `r` acting by an integer matrix of order `d`; literals `(x,y,k)` for
/// `t_x^x t_y^y r^k`.
#[derive(Clone, Debug)]
pub struct Affine2 {
    m: u32,
    d: u8,
    /// `rot[k]` is the matrix of `r^k`, row-major, entries mod m.
    rot: Vec<[u32; 4]>,
    action: WallpaperAction,
    id: Option<String>,
}

fn rotation(d: u32, action: WallpaperAction) -> Result<[i64; 4]> {
    // columns are the images of x and y
    match (d, action) {
        (3, _) => Ok([0, -1, 1, -1]),
        (6, _) => Ok([1, 1, -1, 0]),
        (4, WallpaperAction::Geometric) => Ok([0, -1, 1, 0]),
        (4, WallpaperAction::Printed) => Err(Error::NotAnAutomorphism(
            "x → y, y → y⁻¹ has determinant 0 and does not define an action of Z/4 on Z²".into(),
        )),
        _ => Err(Error::InvalidParameter(format!("rotation order must be 3, 4 or 6, got {d}"))),
    }
}

pub fn wallpaper_quotient(d: u32, m: u32) -> Result<Affine2> {
    wallpaper_quotient_with(d, m, WallpaperAction::Geometric)
}

pub fn wallpaper_quotient_with(d: u32, m: u32, action: WallpaperAction) -> Result<Affine2> {
    let r = rotation(d, action)?;
    affine(d, m, r, action, None)
}

impl Affine2 {
    /// `(Z/m)² ⋊ Z/d` for an arbitrary row-major integer matrix of order dividing `d` mod `m`.
    pub fn with_matrix(d: u32, m: u32, matrix: [i64; 4], id: impl Into<String>) -> Result<Affine2> {
        if d == 0 || d > 255 {
            return Err(Error::InvalidParameter(format!("cyclic order {d} out of range")));
        }
        affine(d, m, matrix, WallpaperAction::Geometric, Some(id.into()))
    }
}

fn affine(d: u32, m: u32, r: [i64; 4], action: WallpaperAction, id: Option<String>) -> Result<Affine2> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!("wallpaper modulus must be ≥ 2, got {m}")));
    }
    let mi = m as i64;
    let red = |v: [i64; 4]| v.map(|x| x.rem_euclid(mi) as u32);
    let mul = |x: [u32; 4], y: [u32; 4]| {
        let (x, y) = (x.map(|v| v as i64), y.map(|v| v as i64));
        red([
            x[0] * y[0] + x[1] * y[2],
            x[0] * y[1] + x[1] * y[3],
            x[2] * y[0] + x[3] * y[2],
            x[2] * y[1] + x[3] * y[3],
        ])
    };
    let one = red([1, 0, 0, 1]);
    let r = red(r);
    let mut rot = vec![one];
    for k in 1..d as usize {
        rot.push(mul(rot[k - 1], r));
    }
    if mul(rot[d as usize - 1], r) != one {
        return Err(Error::Inconsistent(format!("rotation matrix does not have order dividing {d}")));
    }
    Ok(Affine2 { m, d: d as u8, rot, action, id })
}

impl Affine2 {
    pub fn rotation_order(&self) -> u32 {
        self.d as u32
    }
    pub fn modulus(&self) -> u32 {
        self.m
    }
    /// The rotation `r`.
    pub fn r(&self) -> (u32, u32, u8) {
        (0, 0, 1 % self.d)
    }
    /// Image of a translation vector under `r^k`.
    pub fn rotate(&self, k: u8, v: (u32, u32)) -> (u32, u32) {
        let a = self.rot[k as usize];
        let m = self.m as u64;
        let (x, y) = (v.0 as u64, v.1 as u64);
        (((a[0] as u64 * x + a[1] as u64 * y) % m) as u32, ((a[2] as u64 * x + a[3] as u64 * y) % m) as u32)
    }
}

impl FiniteGroup for Affine2 {
    type Elem = (u32, u32, u8);
    fn identity(&self) -> Self::Elem {
        (0, 0, 0)
    }
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        let w = self.rotate(x.2, (y.0, y.1));
        ((x.0 + w.0) % self.m, (x.1 + w.1) % self.m, (x.2 + y.2) % self.d)
    }
    fn inv(&self, x: &Self::Elem) -> Self::Elem {
        let k = (self.d - x.2) % self.d;
        let w = self.rotate(k, (x.0, x.1));
        ((self.m - w.0) % self.m, (self.m - w.1) % self.m, k)
    }
    fn generators(&self) -> Vec<Self::Elem> {
        vec![(1, 0, 0), (0, 1, 0), self.r()]
    }
    fn order(&self) -> BigUint {
        BigUint::from(self.m as u64 * self.m as u64 * self.d as u64)
    }
    fn contains(&self, x: &Self::Elem) -> bool {
        x.0 < self.m && x.1 < self.m && x.2 < self.d
    }
    fn parse_elem(&self, s: &str) -> Result<Self::Elem> {
        match parse_int_tuple(s).as_deref() {
            Some([x, y, k]) => {
                let m = self.m as i64;
                Ok((x.rem_euclid(m) as u32, y.rem_euclid(m) as u32, k.rem_euclid(self.d as i64) as u8))
            }
            _ => Err(Error::Malformed(format!("expected (x,y,k), got {s:?}"))),
        }
    }
    fn format_elem(&self, x: &Self::Elem) -> String {
        format!("({},{},{})", x.0, x.1, x.2)
    }
    fn descriptor(&self) -> GroupDescriptor {
        if let Some(id) = &self.id {
            return GroupDescriptor::Catalogue { id: id.clone() };
        }
        GroupDescriptor::Wallpaper {
            d: self.d as u32,
            m: self.m,
            printed: self.action == WallpaperAction::Printed,
        }
    }
    fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem {
        (rng.gen_range(0..self.m), rng.gen_range(0..self.m), rng.gen_range(0..self.d))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{conj, generated_subgroup, pow};

    #[test]
    fn orders_and_relations() {
        assert_eq!(wallpaper_quotient(3, 3).unwrap().order(), BigUint::from(27u32));
        assert_eq!(wallpaper_quotient(6, 2).unwrap().order(), BigUint::from(24u32));
        for (d, m) in [(3, 4), (4, 3), (6, 5)] {
            let g = wallpaper_quotient(d, m).unwrap();
            let r = g.r();
            assert_eq!(pow(&g, &r, d as u64), g.identity());
            let all = generated_subgroup(&g, &g.generators(), 10_000).unwrap();
            assert_eq!(all.len() as u32, m * m * d);
        }
        let g = wallpaper_quotient(3, 5).unwrap();
        let (x, y) = ((1, 0, 0), (0, 1, 0));
        assert_eq!(conj(&g, &x, &g.r()), y);
        assert_eq!(conj(&g, &y, &g.r()), (4, 4, 0));
        let g = wallpaper_quotient(4, 5).unwrap();
        assert_eq!(conj(&g, &x, &g.r()), y);
        assert_eq!(conj(&g, &y, &g.r()), (4, 0, 0));
        let g = wallpaper_quotient(6, 5).unwrap();
        assert_eq!(conj(&g, &x, &g.r()), (1, 4, 0));
        assert_eq!(conj(&g, &y, &g.r()), x);
    }

    #[test]
    fn printed_variant_is_rejected() {
        assert!(matches!(
            wallpaper_quotient_with(4, 3, WallpaperAction::Printed),
            Err(Error::NotAnAutomorphism(_))
        ));
        assert!(wallpaper_quotient_with(3, 3, WallpaperAction::Printed).is_ok());
        assert!(wallpaper_quotient(5, 3).is_err());
    }
}
