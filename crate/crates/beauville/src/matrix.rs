//! 2×2 matrices over F_p: SL(2,p), PSL(2,p), and the conjugation solvers.

use std::fmt;

use num_bigint::BigUint;
use rand::Rng;

use crate::arith::{inv_mod, is_prime, pow_mod};
use crate::descriptor::GroupDescriptor;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::perm::{Perm, StabChain};

/// Entries `[[a,b],[c,d]]`, reduced into `[0,p)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat2 {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

fn red(x: i64, p: u32) -> u32 {
    x.rem_euclid(p as i64) as u32
}

impl Mat2 {
    pub fn new(p: u32, a: i64, b: i64, c: i64, d: i64) -> Mat2 {
        Mat2 { a: red(a, p), b: red(b, p), c: red(c, p), d: red(d, p) }
    }

    pub fn identity() -> Mat2 {
        Mat2 { a: 1, b: 0, c: 0, d: 1 }
    }

    pub fn mul(&self, o: &Mat2, p: u32) -> Mat2 {
        let p64 = p as u64;
        let f = |x: u32, y: u32, z: u32, w: u32| ((x as u64 * y as u64 + z as u64 * w as u64) % p64) as u32;
        Mat2 {
            a: f(self.a, o.a, self.b, o.c),
            b: f(self.a, o.b, self.b, o.d),
            c: f(self.c, o.a, self.d, o.c),
            d: f(self.c, o.b, self.d, o.d),
        }
    }

    pub fn det(&self, p: u32) -> u32 {
        red(self.a as i64 * self.d as i64 - self.b as i64 * self.c as i64, p)
    }

    pub fn trace(&self, p: u32) -> u32 {
        (self.a + self.d) % p
    }

    pub fn scale(&self, s: u32, p: u32) -> Mat2 {
        let m = |x: u32| ((x as u64 * s as u64) % p as u64) as u32;
        Mat2 { a: m(self.a), b: m(self.b), c: m(self.c), d: m(self.d) }
    }

    pub fn neg(&self, p: u32) -> Mat2 {
        self.scale(p - 1, p)
    }

    /// Inverse; `None` when singular.
    pub fn inverse(&self, p: u32) -> Option<Mat2> {
        let det = self.det(p);
        let di = inv_mod(det as u64, p as u64)? as u32;
        Some(Mat2 { a: self.d, b: red(-(self.b as i64), p), c: red(-(self.c as i64), p), d: self.a }.scale(di, p))
    }

    pub fn pow(&self, mut k: u64, p: u32) -> Mat2 {
        let mut acc = Mat2::identity();
        let mut base = *self;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base, p);
            }
            base = base.mul(&base, p);
            k >>= 1;
        }
        acc
    }

    pub fn order(&self, p: u32) -> u64 {
        let mut y = *self;
        let mut k = 1;
        while y != Mat2::identity() {
            y = y.mul(self, p);
            k += 1;
        }
        k
    }

    /// `h self h⁻¹` for invertible `h`.
    pub fn conj_by(&self, h: &Mat2, p: u32) -> Mat2 {
        h.mul(self, p).mul(&h.inverse(p).expect("invertible conjugator"), p)
    }

    fn as_vec(&self) -> [u32; 4] {
        [self.a, self.b, self.c, self.d]
    }

    fn from_vec(v: [u32; 4]) -> Mat2 {
        Mat2 { a: v[0], b: v[1], c: v[2], d: v[3] }
    }

    /// Canonical representative of `{M, −M}`: first nonzero entry in `1..=(p−1)/2`.
    pub fn psl_normalize(&self, p: u32) -> Mat2 {
        let first = self.as_vec().into_iter().find(|&x| x != 0).unwrap_or(0);
        if first > (p - 1) / 2 {
            self.neg(p)
        } else {
            *self
        }
    }
}

/// Parse `[[a,b],[c,d]]`, optionally followed by `mod p`.
pub fn parse_mat(s: &str, p: u32) -> Result<Mat2> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let (body, modulus) = match compact.split_once("mod") {
        Some((b, m)) => (b.to_string(), Some(m.to_string())),
        None => (compact.clone(), None),
    };
    if let Some(m) = modulus {
        let m: u32 = m.parse().map_err(|_| Error::Malformed(format!("bad modulus in {s:?}")))?;
        if m != p {
            return Err(Error::Malformed(format!("literal is mod {m}, context is mod {p}")));
        }
    }
    let inner = body
        .strip_prefix("[[")
        .and_then(|b| b.strip_suffix("]]"))
        .ok_or_else(|| Error::Malformed(format!("bad matrix literal {s:?}")))?;
    let rows: Vec<&str> = inner.split("],[").collect();
    if rows.len() != 2 {
        return Err(Error::Malformed(format!("bad matrix literal {s:?}")));
    }
    let mut e = Vec::new();
    for r in rows {
        for x in r.split(',') {
            e.push(x.parse::<i64>().map_err(|_| Error::Malformed(format!("bad entry {x:?} in {s:?}")))?);
        }
    }
    if e.len() != 4 {
        return Err(Error::Malformed(format!("bad matrix literal {s:?}")));
    }
    Ok(Mat2::new(p, e[0], e[1], e[2], e[3]))
}

pub fn check_odd_prime(p: u32) -> Result<()> {
    if p < 3 || !is_prime(p as u64) {
        return Err(Error::InvalidParameter(format!("{p} is not an odd prime")));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sl2Constants {
    pub b: Mat2,
    pub s: Mat2,
    pub t: Mat2,
    pub w: Mat2,
}

pub fn sl2_constants(p: u32) -> Result<Sl2Constants> {
    check_odd_prime(p)?;
    let b = Mat2::new(p, 0, 1, -1, 0);
    let s = Mat2::new(p, 0, -1, 1, 1);
    let w = Mat2::new(p, 0, 1, 1, 0);
    Ok(Sl2Constants { b, s, t: b.mul(&s, p), w })
}

/// `D(λ) = diag(λ, λ⁻¹)`.
pub fn diag(p: u32, lambda: u32) -> Result<Mat2> {
    let li = inv_mod(lambda as u64, p as u64)
        .ok_or_else(|| Error::InvalidParameter(format!("{lambda} is not invertible mod {p}")))?;
    Ok(Mat2::new(p, lambda as i64, 0, 0, li as i64))
}

/// `M(k) = [[0,1],[−1,k]]`.
pub fn companion(p: u32, k: u32) -> Mat2 {
    Mat2::new(p, 0, 1, -1, k as i64)
}

/// Smallest residue of exact multiplicative order `q`.
pub fn mult_order_element(p: u32, q: u32) -> Result<u32> {
    check_odd_prime(p)?;
    if q == 0 || !(p - 1).is_multiple_of(q) {
        return Err(Error::NotFound(format!("no element of order {q} in F_{p}^*: {q} does not divide {}", p - 1)));
    }
    (1..p)
        .find(|&l| crate::arith::mult_order(l as u64, p as u64) == q as u64)
        .ok_or_else(|| Error::NotFound(format!("no element of order {q} mod {p}")))
}

pub fn is_square(p: u32, x: u32) -> bool {
    let x = x % p;
    x == 0 || pow_mod(x as u64, ((p - 1) / 2) as u64, p as u64) == 1
}

/// Some square root of a square `x`, the smallest one.
pub fn sqrt_mod(p: u32, x: u32) -> Option<u32> {
    let x = x % p;
    (0..p).find(|&s| (s as u64 * s as u64) % p as u64 == x as u64)
}

/// `e(λ) = (2 − λ − λ⁻¹)/(λ + λ⁻¹ − λ² − λ⁻²)`.
pub fn e_invariant(p: u32, lambda: u32) -> Result<u32> {
    check_odd_prime(p)?;
    let pi = p as i64;
    let l = lambda as i64 % pi;
    let li = inv_mod(l as u64, p as u64)
        .ok_or_else(|| Error::Precondition(format!("{lambda} is not invertible mod {p}")))? as i64;
    let s1 = (l + li) % pi;
    let s2 = (l * l + li * li) % pi;
    let num = red(2 - s1, p);
    let den = red(s1 - s2, p);
    let den_inv = inv_mod(den as u64, p as u64).ok_or_else(|| {
        Error::Precondition(format!("λ+λ⁻¹−λ²−λ⁻² vanishes for λ = {lambda} mod {p}"))
    })?;
    Ok(((num as u64 * den_inv) % p as u64) as u32)
}

/// The conjugating matrix `g = [[1,b],[1,d]]` of the split system.
pub fn split_conjugator(p: u32, lambda: u32) -> Result<Mat2> {
    let pi = p as i64;
    let l = lambda as i64 % pi;
    let li = inv_mod(l as u64, p as u64)
        .ok_or_else(|| Error::InvalidParameter(format!("{lambda} not invertible mod {p}")))? as i64;
    let s1 = (l + li) % pi;
    let s2 = (l * l + li * li) % pi;
    let den = red(s2 - 2, p);
    let den_inv = inv_mod(den as u64, p as u64)
        .ok_or_else(|| Error::Precondition(format!("λ = {lambda} has λ² + λ⁻² = 2 mod {p}")))? as i64;
    let b = red(s1 - s2, p) as i64 * den_inv;
    let d = red(s1 - 2, p) as i64 * den_inv;
    Ok(Mat2::new(p, 1, b, 1, d))
}

/// Basis of `{X : X·x = y·X for every (x, y)}` over F_p.
pub fn intertwiner_basis(p: u32, pairs: &[(Mat2, Mat2)]) -> Vec<Mat2> {
    // Unknown X = [x0 x1; x2 x3]. (X x)_{ij} = Σ_k X_ik x_kj ; (y X)_{ij} = Σ_k y_ik X_kj.
    let mut rows: Vec<[i64; 4]> = Vec::new();
    for (x, y) in pairs {
        let xm = [[x.a as i64, x.b as i64], [x.c as i64, x.d as i64]];
        let ym = [[y.a as i64, y.b as i64], [y.c as i64, y.d as i64]];
        for i in 0..2 {
            for j in 0..2 {
                let mut row = [0i64; 4];
                for k in 0..2 {
                    row[2 * i + k] += xm[k][j];
                    row[2 * k + j] -= ym[i][k];
                }
                rows.push(row.map(|v| v.rem_euclid(p as i64)));
            }
        }
    }
    nullspace(p, rows)
}

fn nullspace(p: u32, mut rows: Vec<[i64; 4]>) -> Vec<Mat2> {
    let pi = p as i64;
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..4 {
        let Some(k) = (r..rows.len()).find(|&k| rows[k][col] != 0) else { continue };
        rows.swap(r, k);
        let inv = inv_mod(rows[r][col] as u64, p as u64).unwrap() as i64;
        for v in rows[r].iter_mut() {
            *v = *v * inv % pi;
        }
        for k in 0..rows.len() {
            if k != r && rows[k][col] != 0 {
                let f = rows[k][col];
                for c in 0..4 {
                    rows[k][c] = (rows[k][c] - f * rows[r][c]).rem_euclid(pi);
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    let free: Vec<usize> = (0..4).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = [0u32; 4];
            v[f] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = red(-rows[i][f], p);
            }
            Mat2::from_vec(v)
        })
        .collect()
}

/// Elements of the span of `basis`, in lexicographic coefficient order.
fn span_iter(p: u32, basis: &[Mat2]) -> impl Iterator<Item = Mat2> + '_ {
    let total = (p as u64).pow(basis.len() as u32);
    (1..total).map(move |mut idx| {
        let mut v = [0u64; 4];
        for m in basis.iter().rev() {
            let coef = idx % p as u64;
            idx /= p as u64;
            for (slot, e) in v.iter_mut().zip(m.as_vec()) {
                *slot = (*slot + coef * e as u64) % p as u64;
            }
        }
        Mat2::from_vec(v.map(|x| x as u32))
    })
}

/// Some invertible `γ` with `γ x γ⁻¹ = y` for each pair, searched in GL(2,p).
pub fn find_gl_conjugator(p: u32, pairs: &[(Mat2, Mat2)]) -> Option<Mat2> {
    let basis = intertwiner_basis(p, pairs);
    if pairs.iter().all(|(x, y)| x == y) {
        return Some(Mat2::identity());
    }
    match basis.len() {
        0 => None,
        1 => Some(basis[0]).filter(|m| m.det(p) != 0),
        _ => span_iter(p, &basis).find(|m| m.det(p) != 0),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub enum Coset {
    #[serde(rename = "SL")]
    Sl,
    #[serde(rename = "SLW")]
    Slw,
}

impl fmt::Display for Coset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Coset::Sl => "SL",
            Coset::Slw => "SLW",
        })
    }
}

impl std::str::FromStr for Coset {
    type Err = Error;
    fn from_str(s: &str) -> Result<Coset> {
        match s.to_ascii_uppercase().as_str() {
            "SL" => Ok(Coset::Sl),
            "SLW" | "SL.W" | "SLW-COSET" => Ok(Coset::Slw),
            _ => Err(Error::InvalidParameter(format!("unknown coset {s:?}"))),
        }
    }
}

/// `γ` with determinant `1` (coset SL) or `−1` (coset SL·W) and `γaγ⁻¹ = aT`, `γcγ⁻¹ = cT`.
pub fn solve_conjugation_sl2(
    p: u32,
    a: &Mat2,
    a_t: &Mat2,
    c: &Mat2,
    c_t: &Mat2,
    coset: Coset,
) -> Result<Option<Mat2>> {
    check_odd_prime(p)?;
    let target = match coset {
        Coset::Sl => 1,
        Coset::Slw => p - 1,
    };
    if coset == Coset::Sl && a == a_t && c == c_t {
        return Ok(Some(Mat2::identity()));
    }
    let basis = intertwiner_basis(p, &[(*a, *a_t), (*c, *c_t)]);
    match basis.len() {
        0 => Ok(None),
        1 => {
            let x0 = basis[0];
            let d = x0.det(p);
            if d == 0 {
                return Ok(None);
            }
            let ratio = ((target as u64 * inv_mod(d as u64, p as u64).unwrap()) % p as u64) as u32;
            Ok(sqrt_mod(p, ratio).filter(|&s| s != 0).map(|s| x0.scale(s, p)))
        }
        _ => Ok(span_iter(p, &basis).find(|m| m.det(p) == target)),
    }
}

/// Legendre symbol class of a nonzero residue: true for squares.
pub fn square_class(p: u32, x: u32) -> bool {
    is_square(p, x)
}

// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct Sl2 {
    p: u32,
}

#[derive(Clone, Debug)]
pub struct Psl2 {
    p: u32,
}

impl Sl2 {
    pub fn new(p: u32) -> Result<Sl2> {
        check_odd_prime(p)?;
        Ok(Sl2 { p })
    }
    pub fn p(&self) -> u32 {
        self.p
    }
}

impl Psl2 {
    pub fn new(p: u32) -> Result<Psl2> {
        check_odd_prime(p)?;
        Ok(Psl2 { p })
    }
    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn project(&self, m: &Mat2) -> Mat2 {
        m.psl_normalize(self.p)
    }
}

fn random_sl2<R: Rng + ?Sized>(p: u32, rng: &mut R) -> Mat2 {
    loop {
        let m = Mat2::new(p, rng.gen_range(0..p) as i64, rng.gen_range(0..p) as i64, rng.gen_range(0..p) as i64, rng.gen_range(0..p) as i64);
        if m.det(p) == 1 {
            return m;
        }
    }
}

/// Action on the projective line: `[x:1]` is point `x`, `[1:0]` is point `p`.
pub fn projective_perm(m: &Mat2, p: u32) -> Perm {
    let pp = p as u64;
    let img = (0..=p)
        .map(|x| {
            let (u, v) = if x == p { (m.a as u64, m.c as u64) } else {
                ((m.a as u64 * x as u64 + m.b as u64) % pp, (m.c as u64 * x as u64 + m.d as u64) % pp)
            };
            if v == 0 {
                p as usize
            } else {
                ((u * inv_mod(v, pp).unwrap()) % pp) as usize
            }
        })
        .collect();
    Perm::from_images(img).expect("invertible matrix permutes the projective line")
}

/// Order of the image of `⟨gens⟩` in PSL(2,p), from a stabilizer chain on the projective line.
pub fn psl_image_order(gens: &[Mat2], p: u32) -> BigUint {
    let perms: Vec<Perm> = gens.iter().map(|m| projective_perm(m, p)).collect();
    StabChain::new(p as usize + 1, &perms).order()
}

fn sl2_gens(p: u32) -> Vec<Mat2> {
    vec![Mat2::new(p, 1, 1, 0, 1), Mat2::new(p, 1, 0, 1, 1)]
}

fn in_range(m: &Mat2, p: u32) -> bool {
    m.a < p && m.b < p && m.c < p && m.d < p
}

impl FiniteGroup for Sl2 {
    type Elem = Mat2;
    fn identity(&self) -> Mat2 {
        Mat2::identity()
    }
    fn mul(&self, x: &Mat2, y: &Mat2) -> Mat2 {
        x.mul(y, self.p)
    }
    fn inv(&self, x: &Mat2) -> Mat2 {
        x.inverse(self.p).expect("SL element")
    }
    fn generators(&self) -> Vec<Mat2> {
        sl2_gens(self.p)
    }
    fn order(&self) -> BigUint {
        let p = self.p as u64;
        BigUint::from(p * (p * p - 1))
    }
    fn contains(&self, x: &Mat2) -> bool {
        in_range(x, self.p) && x.det(self.p) == 1
    }
    fn parse_elem(&self, s: &str) -> Result<Mat2> {
        let m = parse_mat(s, self.p)?;
        if m.det(self.p) != 1 {
            return Err(Error::Malformed(format!("{s} has determinant {} ≠ 1 mod {}", m.det(self.p), self.p)));
        }
        Ok(m)
    }
    fn format_elem(&self, x: &Mat2) -> String {
        x.to_string()
    }
    fn descriptor(&self) -> GroupDescriptor {
        GroupDescriptor::Sl2 { p: self.p }
    }
    fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R) -> Mat2 {
        random_sl2(self.p, rng)
    }
    fn elem_order(&self, x: &Mat2) -> u64 {
        x.order(self.p)
    }
    /// `−I` is the only involution of SL(2,p), so the subgroup contains it exactly when its
    /// image has even order or some generator has even order.
    fn structural_subgroup_order(&self, gens: &[Mat2]) -> Option<BigUint> {
        if !gens.iter().all(|m| self.contains(m)) {
            return None;
        }
        let img = psl_image_order(gens, self.p);
        let two = BigUint::from(2u32);
        let has_minus_one = (&img % &two) == BigUint::from(0u32) || gens.iter().any(|m| m.order(self.p) % 2 == 0);
        Some(if has_minus_one { img * two } else { img })
    }
}

impl FiniteGroup for Psl2 {
    type Elem = Mat2;
    fn identity(&self) -> Mat2 {
        Mat2::identity()
    }
    fn mul(&self, x: &Mat2, y: &Mat2) -> Mat2 {
        x.mul(y, self.p).psl_normalize(self.p)
    }
    fn inv(&self, x: &Mat2) -> Mat2 {
        x.inverse(self.p).expect("SL element").psl_normalize(self.p)
    }
    fn generators(&self) -> Vec<Mat2> {
        sl2_gens(self.p)
    }
    fn order(&self) -> BigUint {
        let p = self.p as u64;
        BigUint::from(p * (p * p - 1) / 2)
    }
    fn contains(&self, x: &Mat2) -> bool {
        in_range(x, self.p) && x.det(self.p) == 1 && x.psl_normalize(self.p) == *x
    }
    fn parse_elem(&self, s: &str) -> Result<Mat2> {
        let m = parse_mat(s, self.p)?;
        if m.det(self.p) != 1 {
            return Err(Error::Malformed(format!("{s} has determinant ≠ 1 mod {}", self.p)));
        }
        Ok(m.psl_normalize(self.p))
    }
    fn format_elem(&self, x: &Mat2) -> String {
        x.to_string()
    }
    fn descriptor(&self) -> GroupDescriptor {
        GroupDescriptor::Psl2 { p: self.p }
    }
    fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R) -> Mat2 {
        random_sl2(self.p, rng).psl_normalize(self.p)
    }
    fn elem_order(&self, x: &Mat2) -> u64 {
        let mut y = *x;
        let mut k = 1;
        while y != Mat2::identity() {
            y = self.mul(&y, x);
            k += 1;
        }
        k
    }
    fn structural_subgroup_order(&self, gens: &[Mat2]) -> Option<BigUint> {
        gens.iter().all(|m| self.contains(m)).then(|| psl_image_order(gens, self.p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{element_order, generated_subgroup};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn constants_relations() {
        for p in [5, 7, 11, 13] {
            let k = sl2_constants(p).unwrap();
            let id = Mat2::identity();
            assert_eq!(k.b.pow(4, p), id);
            assert_eq!(k.s.pow(6, p), id);
            assert_eq!(k.w.pow(2, p), id);
            assert_eq!(k.t, k.b.mul(&k.s, p));
            assert_eq!(k.b.conj_by(&k.w, p), k.b.inverse(p).unwrap());
            assert_eq!(k.s.conj_by(&k.w, p), k.s.inverse(p).unwrap());
        }
        let g7 = Sl2::new(7).unwrap();
        let k7 = sl2_constants(7).unwrap();
        assert_eq!(element_order(&g7, &k7.b).unwrap(), 4);
        assert_eq!(element_order(&g7, &k7.t).unwrap(), 7);
        assert_eq!(sl2_constants(5).unwrap().t.order(5), 5);
        assert!(sl2_constants(9).is_err());
        assert!(sl2_constants(2).is_err());
    }

    #[test]
    fn orders_of_roots() {
        assert_eq!(mult_order_element(11, 5).unwrap(), 3);
        assert!(mult_order_element(11, 7).is_err());
        // exhaustive scan oracle
        let l = mult_order_element(31, 5).unwrap();
        let scan = (2..31u64).find(|&x| pow_mod(x, 5, 31) == 1).unwrap();
        assert_eq!(l as u64, scan);
    }

    #[test]
    fn squares_and_e() {
        let squares: Vec<u32> = (1..11).map(|x| x * x % 11).collect();
        assert!(is_square(11, 3) && squares.contains(&3));
        assert!(!is_square(11, 7) && !squares.contains(&7));
        assert!(is_square(13, 1));
        let e3 = e_invariant(11, 3).unwrap();
        assert_eq!(e3, 7);
        assert!(!is_square(11, e3) && is_square(11, 11 - e3));
        let e9 = e_invariant(11, 9).unwrap();
        assert_eq!(is_square(11, e9), is_square(11, 11 - e3));
        assert!(e_invariant(11, 1).is_err());
    }

    #[test]
    fn parse_literals() {
        let g = Sl2::new(7).unwrap();
        assert_eq!(g.parse_elem("[[0,1],[-1,0]]").unwrap(), sl2_constants(7).unwrap().b);
        assert_eq!(g.parse_elem("[[0,1],[6,0]] mod 7").unwrap(), sl2_constants(7).unwrap().b);
        assert!(g.parse_elem("[[1,1],[1,1]]").is_err());
        assert!(g.parse_elem("[[0,1],[6,0]] mod 5").is_err());
        assert!(g.parse_elem("[[0,1]]").is_err());
        let m = g.parse_elem("[[2,3],[1,2]]").unwrap();
        assert_eq!(g.parse_elem(&g.format_elem(&m)).unwrap(), m);
    }

    #[test]
    fn psl_projection_is_hom() {
        let p = 11;
        let g = Sl2::new(p).unwrap();
        let h = Psl2::new(p).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let x = g.random_elem(&mut rng);
            let y = g.random_elem(&mut rng);
            assert_eq!(h.project(&g.mul(&x, &y)), h.mul(&h.project(&x), &h.project(&y)));
        }
        assert_eq!(generated_subgroup(&h, &h.generators(), 10_000).unwrap().len(), 660);
        assert_eq!(generated_subgroup(&g, &g.generators(), 10_000).unwrap().len(), 1320);
    }

    #[test]
    fn companion_and_diag_orders() {
        for p in [7u32, 11, 13] {
            for l in 2..p {
                let ord = crate::arith::mult_order(l as u64, p as u64);
                assert_eq!(diag(p, l).unwrap().order(p), ord);
            }
            // M(k) has the order of a root of x² − kx + 1; iterate powers as oracle.
            for k in 0..p {
                let m = companion(p, k);
                let mut y = m;
                let mut n = 1;
                while y != Mat2::identity() {
                    y = y.mul(&m, p);
                    n += 1;
                }
                assert_eq!(m.order(p), n);
                assert!((p as u64 * p as u64 - 1).is_multiple_of(n) || n == p as u64 || n == 2 * p as u64);
            }
        }
    }

    fn brute(p: u32, a: &Mat2, at: &Mat2, c: &Mat2, ct: &Mat2, det: u32) -> Vec<Mat2> {
        let mut out = Vec::new();
        for x0 in 0..p {
            for x1 in 0..p {
                for x2 in 0..p {
                    for x3 in 0..p {
                        let m = Mat2 { a: x0, b: x1, c: x2, d: x3 };
                        if m.det(p) == det && m.mul(a, p) == at.mul(&m, p) && m.mul(c, p) == ct.mul(&m, p) {
                            out.push(m);
                        }
                    }
                }
            }
        }
        out
    }

    #[test]
    fn solver_agrees_with_exhaustive_search() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for p in [5u32, 7, 11, 13] {
            let g = Sl2::new(p).unwrap();
            for i in 0..100 {
                let a = g.random_elem(&mut rng);
                let c = g.random_elem(&mut rng);
                let (at, ct) = match i % 3 {
                    0 => (a.inverse(p).unwrap(), c.inverse(p).unwrap()),
                    1 => {
                        let h = g.random_elem(&mut rng);
                        (a.conj_by(&h, p), c.conj_by(&h, p))
                    }
                    _ => {
                        let w = sl2_constants(p).unwrap().w;
                        (a.conj_by(&w, p), c.conj_by(&w, p))
                    }
                };
                for (coset, det) in [(Coset::Sl, 1), (Coset::Slw, p - 1)] {
                    let got = solve_conjugation_sl2(p, &a, &at, &c, &ct, coset).unwrap();
                    let all = brute(p, &a, &at, &c, &ct, det);
                    assert_eq!(got.is_some(), !all.is_empty(), "p={p} coset={coset}");
                    if let Some(x) = got {
                        assert_eq!(x.det(p), det);
                        assert_eq!(a.conj_by(&x, p), at);
                        assert_eq!(c.conj_by(&x, p), ct);
                    }
                }
            }
        }
    }

    #[test]
    fn solver_examples() {
        let id = Mat2::identity();
        assert_eq!(solve_conjugation_sl2(7, &id, &id, &id, &id, Coset::Sl).unwrap(), Some(id));
        let k = sl2_constants(7).unwrap();
        let (bi, si) = (k.b.inverse(7).unwrap(), k.s.inverse(7).unwrap());
        let got = solve_conjugation_sl2(7, &k.b, &bi, &k.s, &si, Coset::Slw).unwrap().unwrap();
        assert_eq!(got.det(7), 6);
        assert_eq!(k.b.conj_by(&got, 7), bi);
        assert!(solve_conjugation_sl2(7, &k.b, &bi, &k.s, &si, Coset::Sl).unwrap().is_none());
    }

    #[test]
    fn projective_order_matches_closure() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for p in [3, 5, 7] {
            let (sl, psl) = (Sl2::new(p).unwrap(), Psl2::new(p).unwrap());
            for _ in 0..40 {
                let k = rng.gen_range(1..3);
                let gens: Vec<Mat2> = (0..k).map(|_| sl.random_elem(&mut rng)).collect();
                let n = generated_subgroup(&sl, &gens, 10_000).unwrap().len();
                assert_eq!(sl.structural_subgroup_order(&gens).unwrap(), BigUint::from(n));
                let pg: Vec<Mat2> = gens.iter().map(|m| psl.project(m)).collect();
                let n = generated_subgroup(&psl, &pg, 10_000).unwrap().len();
                assert_eq!(psl.structural_subgroup_order(&pg).unwrap(), BigUint::from(n));
            }
        }
    }
}
