//! Explicit generator systems. Every constructor re-derives its claims before returning: the
//! type by element orders, generation by a certified strategy, and each conjugating witness by
//! direct multiplication. A mismatch is an `Inconsistent` error, never a silent return.

use std::collections::BTreeMap;

use crate::arith::{gcd, is_prime};
use crate::beauville::TypeTriple;
use crate::caps::Caps;
use crate::constructions::{H4Elem, H4};
use crate::error::{Error, Result};
use crate::group::{conj, generates, FiniteGroup};
use crate::matrix::{
    companion, diag, e_invariant, is_square, mult_order_element, sl2_constants, solve_conjugation_sl2,
    split_conjugator, Coset, Mat2, Sl2,
};
use crate::perm::{Alt, Parity, Perm, Sym};

/// A generating pair with its type and, where one is part of the construction, a conjugating
/// witness `γ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GalleryPair<E> {
    pub a: E,
    pub c: E,
    pub ty: TypeTriple,
    pub gamma: Option<E>,
}

/// Two generating pairs of one group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GalleryUnmixed<E> {
    pub first: GalleryPair<E>,
    pub second: GalleryPair<E>,
}

impl<E: Clone> GalleryUnmixed<E> {
    pub fn quadruple(&self) -> [E; 4] {
        [self.first.a.clone(), self.first.c.clone(), self.second.a.clone(), self.second.c.clone()]
    }
}

/// `(H_[2]; a, c)` on `H_[4]` with `g` the standard coset representative.
#[derive(Clone, Debug)]
pub struct GalleryMixed {
    pub group: H4<Sl2>,
    pub a: H4Elem<Mat2>,
    pub c: H4Elem<Mat2>,
    pub g: H4Elem<Mat2>,
    /// Orders of `a`, `c` and `a⁻¹c⁻¹`.
    pub orders: (u64, u64, u64),
    pub first: GalleryPair<Mat2>,
    pub second: GalleryPair<Mat2>,
}

fn inconsistent(msg: String) -> Error {
    Error::Inconsistent(msg)
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg()))
    }
}

/// Check type and generation; returns the certified pair.
fn certify<G: FiniteGroup>(g: &G, a: G::Elem, c: G::Elem, want: Option<TypeTriple>, caps: &Caps) -> Result<GalleryPair<G::Elem>> {
    let ty = TypeTriple::of(g, &a, &c);
    if let Some(w) = want {
        if ty != w {
            return Err(inconsistent(format!("{}: expected type {w}, computed {ty}", g.descriptor())));
        }
    }
    let gen = generates(g, &a, &c, caps)?;
    if !gen.generates {
        return Err(inconsistent(format!(
            "{}: pair of type {ty} generates a subgroup of order {} only",
            g.descriptor(),
            gen.subgroup_order
        )));
    }
    Ok(GalleryPair { a, c, ty, gamma: None })
}

/// `γ x γ⁻¹ = y` for each listed pair.
fn check_witness<G: FiniteGroup>(g: &G, gamma: &G::Elem, eqs: &[(&G::Elem, &G::Elem)], what: &str) -> Result<()> {
    for (x, y) in eqs {
        if conj(g, x, gamma) != **y {
            return Err(inconsistent(format!("{what}: witness fails γxγ⁻¹ = y for x = {}", g.format_elem(x))));
        }
    }
    Ok(())
}

/// 1-based cycles on `n` points.
fn cycles1(n: usize, cycles: &[Vec<usize>]) -> Result<Perm> {
    let zero: Vec<Vec<usize>> = cycles.iter().map(|c| c.iter().map(|&x| x - 1).collect()).collect();
    Perm::from_cycles(n, &zero)
}

fn prime_param(name: &str, p: u64) -> Result<()> {
    require(is_prime(p), || format!("{name} = {p} is not prime"))
}

// ---------------------------------------------------------------------------
// Symmetric groups

/// The two pairs on `Sₙ`: `a = (5,4,1)(2,6)`, `c = (1,2,3)(4,5,…,n)` and `a' = σ⁻¹`, `c' = τσ²`
/// with `σ = (1,…,n)`, `τ = (1,2)`.
pub fn sn_thm_sym(n: usize, caps: &Caps) -> Result<(Sym, GalleryUnmixed<Perm>)> {
    require(n >= 8, || format!("n = {n} must be at least 8"))?;
    require(n % 3 == 2, || format!("n = {n} must be 2 mod 3"))?;
    let g = Sym::new(n)?;
    let a = cycles1(n, &[vec![5, 4, 1], vec![2, 6]])?;
    let c = cycles1(n, &[vec![1, 2, 3], (4..=n).collect()])?;
    let sigma = cycles1(n, &[(1..=n).collect()])?;
    let tau = cycles1(n, &[vec![1, 2]])?;
    let a2 = sigma.inverse();
    let c2 = tau.mul(&sigma.pow(2));
    let n64 = n as u64;
    let lcm3 = |x: u64| if x.is_multiple_of(3) { x } else { 3 * x };
    let t1 = TypeTriple(6, 3 * (n64 - 3), lcm3(n64 - 4));
    let oc2 = if n.is_multiple_of(2) { n64 } else { (n64 - 1) / 2 * (n64 + 1) / 2 };
    let t2 = TypeTriple(n64, oc2, n64 - 1);
    let first = certify(&g, a, c, Some(t1), caps)?;
    let second = certify(&g, a2, c2, Some(t2), caps)?;
    Ok((g, GalleryUnmixed { first, second }))
}

// ---------------------------------------------------------------------------
// Alternating groups

/// `a = (1,…,q)`, `c = (q+1,…,q+k−1,1)(q+k,p,p−1,…,2)` with `k = n − q`, of type
/// `(q, p(n−q), n−p+2)`.
pub fn an_alp1(n: usize, p: usize, q: usize, caps: &Caps) -> Result<(Alt, GalleryPair<Perm>)> {
    require(n >= 16 && n.is_multiple_of(2), || format!("n = {n} must be even and at least 16"))?;
    prime_param("p", p as u64)?;
    prime_param("q", q as u64)?;
    require(3 <= p && p <= q && q + 3 <= n, || format!("need 3 ≤ p ≤ q ≤ n − 3, got p = {p}, q = {q}, n = {n}"))?;
    require(!(n - q).is_multiple_of(p), || format!("n − q = {} is divisible by p = {p}", n - q))?;
    let k = n - q;
    let g = Alt::new(n)?;
    let a = cycles1(n, &[(1..=q).collect()])?;
    let mut long: Vec<usize> = (q + 1..q + k).collect();
    long.push(1);
    let mut short = vec![q + k];
    short.extend((2..=p).rev());
    let c = cycles1(n, &[long, short])?;
    let want = TypeTriple(q as u64, (p * (n - q)) as u64, (n - p + 2) as u64);
    Ok((g.clone(), certify(&g, a, c, Some(want), caps)?))
}

/// The printed permutations of the `(2,3,84)` system on `{0,…,n−1}` and the odd `γ`.
pub fn alp2_1_data(n: usize) -> Result<(Perm, Perm, Perm)> {
    let m = (n - 4) / 6;
    let t = |x: usize, y: usize| vec![x, y];
    let mut gamma = Vec::new();
    for i in 1..=m {
        gamma.push(t(6 * i - 2, 6 * i + 1));
    }
    gamma.push(t(2, 3));
    for i in 1..=m {
        gamma.push(t(6 * i - 1, 6 * i + 3));
        gamma.push(t(6 * i, 6 * i + 2));
    }
    let gamma = Perm::from_cycles(n, &gamma)?;
    let pairs: Vec<Vec<usize>> = (1..=m).map(|i| t(6 * i - 4, 6 * i - 1)).collect();
    let prod = Perm::from_cycles(n, &pairs)?;
    let prod_conj = gamma.mul(&prod).mul(&gamma.inverse());
    let mut a = Perm::from_cycles(n, &[t(0, 1)])?;
    a = a.mul(&Perm::from_cycles(n, &(1..=m).map(|i| t(6 * i - 2, 6 * i + 1)).collect::<Vec<_>>())?);
    a = a.mul(&prod).mul(&prod_conj).mul(&Perm::from_cycles(n, &[t(n - 2, n - 4)])?);
    let c = Perm::from_cycles(n, &(1..=(n - 1) / 3).map(|i| vec![3 * i - 2, 3 * i - 1, 3 * i]).collect::<Vec<_>>())?;
    Ok((a, c, gamma))
}

/// A pair of type `(2,3,84)` on `Aₙ` with an odd `γ` inverting both.
pub fn an_alp2_1(n: usize, caps: &Caps) -> Result<(Alt, GalleryPair<Perm>)> {
    require(n >= 16 && n.is_multiple_of(4) && n % 3 == 1, || {
        format!("n = {n} must be at least 16, 0 mod 4 and 1 mod 3")
    })?;
    let (a, c, gamma) = alp2_1_data(n)?;
    let g = Alt::new(n)?;
    let mut pair = certify(&g, a, c, Some(TypeTriple(2, 3, 84)), caps)?;
    let (ai, ci) = (pair.a.inverse(), pair.c.inverse());
    check_witness(&g, &gamma, &[(&pair.a, &ai), (&pair.c, &ci)], "(2,3,84) system")?;
    if gamma.parity() != Parity::Odd {
        return Err(inconsistent("γ of the (2,3,84) system is even".into()));
    }
    pair.gamma = Some(gamma);
    Ok((g, pair))
}

/// The printed permutations of the `(p,5p,2p+3)` system on `{0,…,3p}` and `γ`, for any odd
/// `p ≥ 3`, without checking the claimed type.
pub fn alp2_2_data(p: usize) -> Result<(Perm, Perm, Perm)> {
    require(p >= 3 && p % 2 == 1, || format!("p = {p} must be odd and at least 3"))?;
    let n = 3 * p + 1;
    let mut gamma = vec![vec![p + 1, 2 * p + 1]];
    gamma.extend((1..=(p - 1) / 2).map(|i| vec![1 + i, p + 1 - i]));
    gamma.extend((1..p).map(|i| vec![p + 1 + i, 3 * p + 1 - i]));
    let gamma = Perm::from_cycles(n, &gamma)?;
    let a = Perm::from_cycles(n, &[(1..=p).collect(), (p + 1..=2 * p).collect(), (2 * p + 1..=3 * p).collect()])?;
    let mut first = vec![0, p];
    first.extend((2..p).rev());
    let c = Perm::from_cycles(n, &[first, vec![1, p + 1, 3 * p, p + 2, 2 * p + 1]])?;
    Ok((a, c, gamma))
}

/// A pair of type `(p,5p,2p+3)` on `A_{3p+1}` with `γ` inverting both; `γ` is odd for
/// `p ≡ 1 mod 4` and even for `p ≡ 3 mod 4`.
pub fn an_alp2_2(p: usize, caps: &Caps) -> Result<(Alt, GalleryPair<Perm>)> {
    prime_param("p", p as u64)?;
    require(p > 5, || format!("p = {p} must exceed 5"))?;
    let (a, c, gamma) = alp2_2_data(p)?;
    let g = Alt::new(3 * p + 1)?;
    let p64 = p as u64;
    let mut pair = certify(&g, a, c, Some(TypeTriple(p64, 5 * p64, 2 * p64 + 3)), caps)?;
    let (ai, ci) = (pair.a.inverse(), pair.c.inverse());
    check_witness(&g, &gamma, &[(&pair.a, &ai), (&pair.c, &ci)], "(p,5p,2p+3) system")?;
    let want = if p % 4 == 1 { Parity::Odd } else { Parity::Even };
    if gamma.parity() != want {
        return Err(inconsistent(format!("γ has parity {:?}, expected {want:?}", gamma.parity())));
    }
    pair.gamma = Some(gamma);
    Ok((g, pair))
}

/// The pair of type `(2k−3, 2k−2, 2k−2)` on `A_{2k}` with `γ = aα` satisfying `γaγ⁻¹ = a⁻¹`,
/// `γcγ⁻¹ = ac`.
pub fn an_alp3(k: usize, caps: &Caps) -> Result<(Alt, GalleryPair<Perm>)> {
    require(k >= 8, || format!("k = {k} must be at least 8 (n = 2k ≥ 16)"))?;
    let n = 2 * k;
    let a = cycles1(n, &[(1..=2 * k - 3).collect()])?;
    let d = cycles1(
        n,
        &[vec![1, 2, 3], vec![2 * k - 3, 2 * k - 4, 2 * k - 5], vec![k - 1, 2 * k - 1], vec![2 * k - 2, k - 2, 2 * k, k]],
    )?;
    let mut alpha: Vec<Vec<usize>> = (1..=k - 2).map(|i| vec![i, 2 * k - 2 - i]).collect();
    alpha.push(vec![2 * k - 2, 2 * k]);
    let alpha = cycles1(n, &alpha)?;
    let c = d.mul(&a.pow((k - 2) as u64));
    let gamma = a.mul(&alpha);
    let g = Alt::new(n)?;
    let k64 = k as u64;
    let mut pair = certify(&g, a, c, Some(TypeTriple(2 * k64 - 3, 2 * k64 - 2, 2 * k64 - 2)), caps)?;
    let ai = pair.a.inverse();
    let ac = pair.a.mul(&pair.c);
    check_witness(&g, &gamma, &[(&pair.a, &ai), (&pair.c, &ac)], "(2k−3,2k−2,2k−2) system")?;
    let want = if k.is_multiple_of(2) { Parity::Odd } else { Parity::Even };
    if gamma.parity() != want {
        return Err(inconsistent(format!("γ has parity {:?}, expected {want:?}", gamma.parity())));
    }
    pair.gamma = Some(gamma);
    Ok((g, pair))
}

/// The structure on `A_{3p+1}` combining the `(3p−2,3p−1,3p−1)` and `(p,5p,2p+3)` systems.
pub fn an_intro3(p: usize, caps: &Caps) -> Result<(Alt, GalleryUnmixed<Perm>)> {
    prime_param("p", p as u64)?;
    require(p > 5 && p % 4 == 1, || format!("p = {p} must exceed 5 and be 1 mod 4"))?;
    require(p % 5 != 2 && p % 5 != 4, || format!("p = {p} must not be 2 or 4 mod 5"))?;
    require(p % 13 != 5, || format!("p = {p} must not be 5 mod 13"))?;
    require(p % 11 != 4, || format!("p = {p} must not be 4 mod 11"))?;
    let (g, first) = an_alp3((3 * p).div_ceil(2), caps)?;
    let (_, second) = an_alp2_2(p, caps)?;
    let d = gcd_u128(first.ty.nu(), second.ty.nu());
    if d != 1 {
        return Err(inconsistent(format!("ν's share the factor {d}")));
    }
    Ok((g, GalleryUnmixed { first, second }))
}

fn gcd_u128(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd_u128(b, a % b)
    }
}

// ---------------------------------------------------------------------------
// SL(2,p)

/// `(B, S)`, of type `(4,6,p)`.
pub fn sl2_type46p(p: u32, caps: &Caps) -> Result<(Sl2, GalleryPair<Mat2>)> {
    let g = Sl2::new(p)?;
    let k = sl2_constants(p)?;
    let pair = certify(&g, k.b, k.s, Some(TypeTriple(4, 6, p as u64)), caps)?;
    Ok((g, pair))
}

/// `(D(λ), g D(λ) g⁻¹)` for the given `λ` of prime order `q ≥ 5`, `q | p − 1`.
pub fn sl2_qqq_split_lambda(p: u32, lambda: u32, caps: &Caps) -> Result<(Sl2, GalleryPair<Mat2>)> {
    let g = Sl2::new(p)?;
    let q = crate::arith::mult_order(lambda as u64 % p as u64, p as u64);
    require(q >= 5 && is_prime(q), || format!("λ = {lambda} has order {q} mod {p}; need a prime ≥ 5"))?;
    let d = diag(p, lambda)?;
    let conj_g = split_conjugator(p, lambda)?;
    let pair = certify(&g, d, d.conj_by(&conj_g, p), Some(TypeTriple(q, q, q)), caps)?;
    let lam = lambda as u64 % p as u64;
    let want_trace = ((lam + crate::arith::inv_mod(lam, p as u64).unwrap()) % p as u64) as u32;
    if g.mul(&pair.a, &pair.c).trace(p) != want_trace {
        return Err(inconsistent("trace of the product is not λ + λ⁻¹".into()));
    }
    Ok((g, pair))
}

/// The split `(q,q,q)` system with the smallest `λ` of order `q`.
pub fn sl2_qqq_split(p: u32, q: u32, caps: &Caps) -> Result<(Sl2, GalleryPair<Mat2>)> {
    prime_param("q", q as u64)?;
    require(q >= 5, || format!("q = {q} must be at least 5"))?;
    let lambda = mult_order_element(p, q)?;
    sl2_qqq_split_lambda(p, lambda, caps)
}

/// Smallest `k` with `M(k)` of order `q`.
fn trace_of_order(p: u32, q: u32) -> Result<u32> {
    (0..p)
        .find(|&k| companion(p, k).order(p) == q as u64)
        .ok_or_else(|| Error::NotFound(format!("no companion matrix of order {q} mod {p}")))
}

/// Value of the trace condition `Tr(x·gxg⁻¹) = r` for `x = M(r)`, `g = [[1,s],[t,1+st]]`.
pub fn curve_equation(p: u32, r: u32, s: u32, t: u32) -> u32 {
    let pm = p as i128;
    let (r, s, t) = (r as i128, s as i128, t as i128);
    let v = -s * s * t * t + s * s * t * r - s * s - s * t * t * r + s * t * r * r - 2 * s * t - t * t + r * r - r - 2;
    v.rem_euclid(pm) as u32
}

/// `(M(k), g M(k) g⁻¹)` of type `(q,q,q)` for `q | p + 1`, from the first point `(s,t)` of the
/// trace curve that yields a generating pair.
pub fn sl2_qqq_nonsplit(p: u32, q: u32, caps: &Caps) -> Result<(Sl2, GalleryPair<Mat2>)> {
    prime_param("q", q as u64)?;
    require(q >= 5, || format!("q = {q} must be at least 5"))?;
    let g = Sl2::new(p)?;
    require((p + 1).is_multiple_of(q), || format!("q = {q} does not divide p + 1 = {}", p + 1))?;
    let k = trace_of_order(p, q)?;
    let x = companion(p, k);
    let (xi, mx, mxi) = (g.inv(&x), x.neg(p), g.inv(&x).neg(p));
    for s in 0..p {
        for t in 0..p {
            if curve_equation(p, k, s, t) != 0 {
                continue;
            }
            let h = Mat2::new(p, 1, s as i64, t as i64, 1 + s as i64 * t as i64);
            let y = x.conj_by(&h, p);
            if g.mul(&x, &y).trace(p) != k {
                return Err(inconsistent(format!("curve point ({s},{t}) does not give trace {k}")));
            }
            if [x, xi, mx, mxi].contains(&y) {
                continue;
            }
            if generates(&g, &x, &y, caps)?.generates {
                let pair = certify(&g, x, y, Some(TypeTriple(q as u64, q as u64, q as u64)), caps)?;
                return Ok((g, pair));
            }
        }
    }
    Err(Error::NotFound(format!("no generating point on the trace curve for p = {p}, q = {q}")))
}

/// A `(5,5,5)` system whose simultaneous inversion is solvable in exactly the requested coset of
/// SL(2,p) in SL±(2,p); the witness `γ` is returned. Needs `p ≡ 3 mod 4`, `p ≡ 1 mod 5`.
pub fn sl2_555_coset(p: u32, want: Coset, caps: &Caps) -> Result<(Sl2, GalleryPair<Mat2>)> {
    Sl2::new(p)?;
    require(p % 4 == 3 && p % 5 == 1, || format!("p = {p} must be 3 mod 4 and 1 mod 5"))?;
    let l = mult_order_element(p, 5)?;
    let l2 = ((l as u64 * l as u64) % p as u64) as u32;
    let square_wanted = want == Coset::Sl;
    let mut chosen = None;
    for lam in [l, l2] {
        if is_square(p, e_invariant(p, lam)?) == square_wanted {
            chosen = Some(lam);
            break;
        }
    }
    let lam = chosen.ok_or_else(|| inconsistent(format!("neither λ nor λ² has the wanted square class mod {p}")))?;
    let (g, mut pair) = sl2_qqq_split_lambda(p, lam, caps)?;
    let (ai, ci) = (g.inv(&pair.a), g.inv(&pair.c));
    let other = if want == Coset::Sl { Coset::Slw } else { Coset::Sl };
    let gamma = solve_conjugation_sl2(p, &pair.a, &ai, &pair.c, &ci, want)?
        .ok_or_else(|| inconsistent(format!("no inverting γ in coset {want} for λ = {lam}")))?;
    if solve_conjugation_sl2(p, &pair.a, &ai, &pair.c, &ci, other)?.is_some() {
        return Err(inconsistent(format!("inversion also solvable in coset {other} for λ = {lam}")));
    }
    pair.gamma = Some(gamma);
    Ok((g, pair))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Torus {
    Split,
    Nonsplit,
}

impl std::str::FromStr for Torus {
    type Err = Error;
    fn from_str(s: &str) -> Result<Torus> {
        match s {
            "split" => Ok(Torus::Split),
            "nonsplit" | "non-split" => Ok(Torus::Nonsplit),
            _ => Err(Error::InvalidParameter(format!("expected split or nonsplit, got {s:?}"))),
        }
    }
}

/// `(x₁, g x₂ g⁻¹)` of type `(q₁, q₂, q₁q₂)` with `xᵢ` diagonal (split) or companion
/// (nonsplit) of order `qᵢ`; `g` is the first generating choice among `[[1,s],[t,1+st]]`.
pub fn sl2_q1q2(p: u32, q1: u32, q2: u32, torus: Torus, caps: &Caps) -> Result<(Sl2, GalleryPair<Mat2>)> {
    let g = Sl2::new(p)?;
    prime_param("q1", q1 as u64)?;
    prime_param("q2", q2 as u64)?;
    require(5 <= q1 && q1 < q2, || format!("need 5 ≤ q1 < q2, got {q1}, {q2}"))?;
    let (x1, x2) = match torus {
        Torus::Split => {
            require((p - 1).is_multiple_of(q1 * q2), || format!("q1·q2 = {} does not divide p − 1", q1 * q2))?;
            (diag(p, mult_order_element(p, q1)?)?, diag(p, mult_order_element(p, q2)?)?)
        }
        Torus::Nonsplit => {
            require((p + 1).is_multiple_of(q1 * q2), || format!("q1·q2 = {} does not divide p + 1", q1 * q2))?;
            (companion(p, trace_of_order(p, q1)?), companion(p, trace_of_order(p, q2)?))
        }
    };
    let want = TypeTriple(q1 as u64, q2 as u64, (q1 * q2) as u64);
    for s in 0..p {
        for t in 0..p {
            let h = Mat2::new(p, 1, s as i64, t as i64, 1 + s as i64 * t as i64);
            let y = x2.conj_by(&h, p);
            if TypeTriple::of(&g, &x1, &y) != want {
                continue;
            }
            if generates(&g, &x1, &y, caps)?.generates {
                return Ok((g.clone(), certify(&g, x1, y, Some(want), caps)?));
            }
        }
    }
    Err(Error::NotFound(format!("no conjugate of type {want} generating SL(2,{p})")))
}

// ---------------------------------------------------------------------------
// Mixed

/// `a = (B, a₂, 2)`, `c = (S, c₂, 2)` in `H_[4]`, `H = SL(2,p)`, with `(a₂, c₂)` the `(5,5,5)`
/// system inverted only inside SL. Orders `(20, 30, 5p)`.
pub fn mixed_intro2(p: u32, caps: &Caps) -> Result<GalleryMixed> {
    require(p % 4 == 3 && p % 5 == 1, || format!("p = {p} must be 3 mod 4 and 1 mod 5"))?;
    let (h, first) = sl2_type46p(p, caps)?;
    let (_, second) = sl2_555_coset(p, Coset::Sl, caps)?;
    let group = H4::new(h);
    let a = H4Elem { h1: first.a, h2: second.a, t: 2 };
    let c = H4Elem { h1: first.c, h2: second.c, t: 2 };
    let g = group.coset_rep();
    let orders = crate::beauville::mixed_orders(&group, &a, &c);
    if orders != (20, 30, 5 * p as u64) {
        return Err(inconsistent(format!("orders {orders:?}, expected (20, 30, {})", 5 * p)));
    }
    Ok(GalleryMixed { group, a, c, g, orders, first, second })
}

// ---------------------------------------------------------------------------
// Name-based access

/// Parameters for [`build`]; unused ones are ignored.
#[derive(Clone, Debug, Default)]
pub struct Params {
    pub n: Option<usize>,
    pub p: Option<u32>,
    pub q: Option<u32>,
    pub q2: Option<u32>,
    pub k: Option<usize>,
    pub coset: Option<Coset>,
    pub torus: Option<Torus>,
}

/// Gallery entries: name, short description, required parameters.
pub const ENTRIES: &[(&str, &str, &str)] = &[
    ("sym-thm", "two pairs on S_n, n ≥ 8, n ≡ 2 mod 3", "--n"),
    ("alt-cycles", "pair of type (q, p(n−q), n−p+2) on A_n", "--n --p --q"),
    ("alt-2-3-84", "pair of type (2,3,84) on A_n with an odd inverting γ", "--n"),
    ("alt-three-cycles", "pair of type (p,5p,2p+3) on A_{3p+1} with inverting γ", "--p"),
    ("alt-twisted", "pair of type (2k−3,2k−2,2k−2) on A_{2k} with γaγ⁻¹ = a⁻¹, γcγ⁻¹ = ac", "--k"),
    ("alt-conjugate-not-real", "structure on A_{3p+1} biholomorphic to its conjugate but not real", "--p"),
    ("sl2-bs", "(B, S) on SL(2,p), type (4,6,p)", "--p"),
    ("sl2-split", "(q,q,q) system from a diagonal matrix, q | p − 1", "--p --q"),
    ("sl2-nonsplit", "(q,q,q) system from a companion matrix, q | p + 1", "--p --q"),
    ("sl2-555-coset", "(5,5,5) system inverted only in the chosen coset SL or SLW", "--p --coset"),
    ("sl2-q1q2", "pair of type (q1,q2,q1q2)", "--p --q --q2 --torus"),
    ("sl2-bs-nonsplit", "(B,S) together with a nonsplit (q,q,q) system on SL(2,p)", "--p --q"),
    ("mixed-h4-sl2", "mixed structure on H_[4] for H = SL(2,p)", "--p"),
];

fn need<T: Copy>(v: Option<T>, name: &str) -> Result<T> {
    v.ok_or_else(|| Error::InvalidParameter(format!("missing parameter --{name}")))
}

fn with_gamma<G: FiniteGroup>(g: &G, pair: &GalleryPair<G::Elem>, extra: &mut BTreeMap<String, String>, key: &str) {
    extra.insert(format!("type{key}"), pair.ty.to_string());
    if let Some(gm) = &pair.gamma {
        extra.insert(format!("gamma{key}"), g.format_elem(gm));
    }
}

fn pair_structure<G: FiniteGroup>(g: &G, pair: &GalleryPair<G::Elem>) -> crate::structure::Structure {
    let mut extra = BTreeMap::new();
    with_gamma(g, pair, &mut extra, "");
    crate::structure::Structure::Pair {
        group: g.descriptor(),
        a: g.format_elem(&pair.a),
        c: g.format_elem(&pair.c),
        extra,
    }
}

fn unmixed_structure<G: FiniteGroup>(g: &G, v: &GalleryUnmixed<G::Elem>) -> crate::structure::Structure {
    let mut extra = BTreeMap::new();
    with_gamma(g, &v.first, &mut extra, "1");
    with_gamma(g, &v.second, &mut extra, "2");
    crate::structure::Structure::Unmixed {
        group: g.descriptor(),
        a1: g.format_elem(&v.first.a),
        c1: g.format_elem(&v.first.c),
        a2: g.format_elem(&v.second.a),
        c2: g.format_elem(&v.second.c),
        extra,
    }
}

/// Build a gallery entry by name (as listed in [`ENTRIES`]; the constructor names are accepted
/// too) as a structure file.
pub fn build(name: &str, params: &Params, caps: &Caps) -> Result<crate::structure::Structure> {
    let name = name.replace('_', "-");
    Ok(match name.as_str() {
        "sym-thm" | "sn-thm-sym" => {
            let (g, v) = sn_thm_sym(need(params.n, "n")?, caps)?;
            unmixed_structure(&g, &v)
        }
        "alt-cycles" | "an-alp1" => {
            let (g, v) = an_alp1(need(params.n, "n")?, need(params.p, "p")? as usize, need(params.q, "q")? as usize, caps)?;
            pair_structure(&g, &v)
        }
        "alt-2-3-84" | "an-alp2-1" => {
            let (g, v) = an_alp2_1(need(params.n, "n")?, caps)?;
            pair_structure(&g, &v)
        }
        "alt-three-cycles" | "an-alp2-2" => {
            let (g, v) = an_alp2_2(need(params.p, "p")? as usize, caps)?;
            pair_structure(&g, &v)
        }
        "alt-twisted" | "an-alp3" => {
            let (g, v) = an_alp3(need(params.k, "k")?, caps)?;
            pair_structure(&g, &v)
        }
        "alt-conjugate-not-real" | "an-intro3" => {
            let (g, v) = an_intro3(need(params.p, "p")? as usize, caps)?;
            unmixed_structure(&g, &v)
        }
        "sl2-bs" | "sl2-type46p" => {
            let (g, v) = sl2_type46p(need(params.p, "p")?, caps)?;
            pair_structure(&g, &v)
        }
        "sl2-split" | "sl2-qqq-split" => {
            let (g, v) = sl2_qqq_split(need(params.p, "p")?, need(params.q, "q")?, caps)?;
            pair_structure(&g, &v)
        }
        "sl2-nonsplit" | "sl2-qqq-nonsplit" => {
            let (g, v) = sl2_qqq_nonsplit(need(params.p, "p")?, need(params.q, "q")?, caps)?;
            pair_structure(&g, &v)
        }
        "sl2-555-coset" => {
            let (g, v) = sl2_555_coset(need(params.p, "p")?, params.coset.unwrap_or(Coset::Sl), caps)?;
            pair_structure(&g, &v)
        }
        "sl2-q1q2" => {
            let (g, v) = sl2_q1q2(
                need(params.p, "p")?,
                need(params.q, "q")?,
                need(params.q2, "q2")?,
                params.torus.unwrap_or(Torus::Split),
                caps,
            )?;
            pair_structure(&g, &v)
        }
        "sl2-bs-nonsplit" => {
            let (g, v) = sl2_bs_nonsplit(need(params.p, "p")?, need(params.q, "q")?, caps)?;
            unmixed_structure(&g, &v)
        }
        "mixed-h4-sl2" | "mixed-intro2" => {
            let m = mixed_intro2(need(params.p, "p")?, caps)?;
            let mut extra = BTreeMap::new();
            extra.insert("orders".into(), format!("{:?}", m.orders));
            extra.insert("type1".into(), m.first.ty.to_string());
            extra.insert("type2".into(), m.second.ty.to_string());
            crate::structure::Structure::Mixed {
                group: m.group.descriptor(),
                g0: crate::beauville::G0Spec::H2,
                a: m.group.format_elem(&m.a),
                c: m.group.format_elem(&m.c),
                g: m.group.format_elem(&m.g),
                perfect: true,
                extra,
            }
        }
        other => {
            let names: Vec<&str> = ENTRIES.iter().map(|e| e.0).collect();
            return Err(Error::InvalidParameter(format!("unknown gallery entry {other:?}; known: {}", names.join(", "))));
        }
    })
}

/// `(B, S)` with a nonsplit `(q,q,q)` system; `ν`'s are coprime when `q ∤ 6p`.
pub fn sl2_bs_nonsplit(p: u32, q: u32, caps: &Caps) -> Result<(Sl2, GalleryUnmixed<Mat2>)> {
    let (g, first) = sl2_type46p(p, caps)?;
    let (_, second) = sl2_qqq_nonsplit(p, q, caps)?;
    if gcd(q as u64, 6 * p as u64) != 1 {
        return Err(Error::InvalidParameter(format!("q = {q} shares a factor with 6p")));
    }
    Ok((g, GalleryUnmixed { first, second }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{conjugator_search, Ambient, ConjugatorSearch};

    #[test]
    fn symmetric_pairs() {
        let caps = Caps::default();
        let (_, v) = sn_thm_sym(8, &caps).unwrap();
        assert_eq!(v.first.ty, TypeTriple(6, 15, 12));
        assert_eq!(v.second.ty, TypeTriple(8, 8, 7));
        let (_, v) = sn_thm_sym(11, &caps).unwrap();
        assert_eq!(v.second.ty, TypeTriple(11, 30, 10));
        assert!(sn_thm_sym(9, &caps).is_err());
    }

    #[test]
    fn alternating_small() {
        let caps = Caps::default();
        let (_, pr) = an_alp1(18, 5, 11, &caps).unwrap();
        assert_eq!(pr.ty, TypeTriple(11, 35, 15));
        assert!(an_alp1(16, 5, 10, &caps).is_err());
        assert!(an_alp1(16, 5, 11, &caps).is_err());
        for n in [16, 28] {
            let (_, pr) = an_alp2_1(n, &caps).unwrap();
            assert_eq!(pr.ty, TypeTriple(2, 3, 84));
        }
        let (_, pr) = an_alp2_2(7, &caps).unwrap();
        assert_eq!(pr.ty, TypeTriple(7, 35, 17));
        assert_eq!(pr.gamma.unwrap().parity(), Parity::Even);
        let (_, pr) = an_alp3(9, &caps).unwrap();
        assert_eq!(pr.ty, TypeTriple(15, 16, 16));
        assert_eq!(pr.gamma.unwrap().parity(), Parity::Even);
    }

    #[test]
    fn printed_conjugate_product() {
        // ∏(6i−4,6i−1)^γ equals ∏_{i≥2}(6i−6,6i+3)·(3,9)
        for n in [16, 28, 40] {
            let m = (n - 4) / 6;
            let (_, _, gamma) = alp2_1_data(n).unwrap();
            let prod = Perm::from_cycles(n, &(1..=m).map(|i| vec![6 * i - 4, 6 * i - 1]).collect::<Vec<_>>()).unwrap();
            let mut printed: Vec<Vec<usize>> = (2..=m).map(|i| vec![6 * i - 6, 6 * i + 3]).collect();
            printed.push(vec![3, 9]);
            let printed = Perm::from_cycles(n, &printed).unwrap();
            assert_eq!(gamma.mul(&prod).mul(&gamma.inverse()), printed, "n = {n}");
        }
    }

    #[test]
    fn three_cycles_data_at_five() {
        let (a, c, gamma) = alp2_2_data(5).unwrap();
        assert_eq!((a.order(), c.order(), c.mul(&a).order()), (5, 5, 13));
        assert_eq!(gamma.parity(), Parity::Odd);
        assert!(an_alp2_2(5, &Caps::default()).is_err());
    }

    #[test]
    fn twisted_pair_has_no_inverting_conjugator() {
        let caps = Caps::default();
        let (_, pr) = an_alp3(8, &caps).unwrap();
        let (ai, ci) = (pr.a.inverse(), pr.c.inverse());
        for (ta, tc) in [(&ai, &ci), (&ci, &ai)] {
            let r = conjugator_search(&pr.a, ta, &pr.c, tc, Ambient::Sym, caps.centralizer).unwrap();
            assert_eq!(r, ConjugatorSearch::Solutions(vec![]));
        }
    }

    #[test]
    fn sl2_systems() {
        let caps = Caps::default();
        assert_eq!(sl2_type46p(7, &caps).unwrap().1.ty, TypeTriple(4, 6, 7));
        assert_eq!(sl2_qqq_split(11, 5, &caps).unwrap().1.ty, TypeTriple(5, 5, 5));
        let (g, pr) = sl2_qqq_nonsplit(13, 7, &caps).unwrap();
        assert_eq!(pr.ty, TypeTriple(7, 7, 7));
        let n = crate::group::generated_subgroup(&g, &[pr.a, pr.c], 10_000).unwrap().len();
        assert_eq!(n, 2184);
        for want in [Coset::Sl, Coset::Slw] {
            let (_, pr) = sl2_555_coset(11, want, &caps).unwrap();
            let det = pr.gamma.unwrap().det(11);
            assert_eq!(det, if want == Coset::Sl { 1 } else { 10 });
        }
        assert!(sl2_555_coset(13, Coset::Sl, &caps).is_err());
    }

    #[test]
    fn curve_matches_trace() {
        for p in [7, 13] {
            for r in 0..p {
                for s in 0..p {
                    for t in 0..p {
                        let x = companion(p, r);
                        let h = Mat2::new(p, 1, s as i64, t as i64, 1 + s as i64 * t as i64);
                        let tr = x.mul(&x.conj_by(&h, p), p).trace(p);
                        assert_eq!(curve_equation(p, r, s, t) == 0, tr == r, "({r},{s},{t}) mod {p}");
                    }
                }
            }
        }
    }

    #[test]
    fn mixed_orders() {
        let m = mixed_intro2(11, &Caps::default()).unwrap();
        assert_eq!(m.orders, (20, 30, 55));
        assert!(mixed_intro2(13, &Caps::default()).is_err());
    }
}
