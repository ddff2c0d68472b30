//! Automorphism backends. Each backend solves "is there an automorphism carrying one
//! generating pair to another" and labels automorphisms by outer class.

use std::collections::{HashMap, VecDeque};
use std::fmt::Debug;
use std::sync::Arc;

use serde::Serialize;

use crate::arith::{gcd, inv_mod};
use crate::caps::Caps;
use crate::constructions::{Ab2, Affine2, Cyclic, Metacyclic, Product, TableGroup, H4};
use crate::error::{Error, Result};
use crate::group::{conj, generated_subgroup, FiniteGroup};
use crate::matrix::{find_gl_conjugator, is_square, Coset, Mat2, Psl2, Sl2};
use crate::perm::{find_conjugator, Alt, Ambient, Parity, Perm, Sym};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AutKind {
    InnerOnly,
    SymConjugation,
    SlpmConjugation,
    Gl2Action,
    H4Product,
    Exhaustive,
}

/// Outer class of an automorphism. Two automorphisms differ by an inner one iff labels agree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "class", content = "value", rename_all = "kebab-case")]
pub enum OuterLabel {
    Inner,
    Parity(Parity),
    Coset(Coset),
    Exact(String),
}

pub trait AutGroup: FiniteGroup + Clone + 'static {
    type Aut: Clone + Debug + Send + Sync;

    fn aut_kind(&self) -> AutKind;
    /// The automorphism taking `src` to `dst`, if any. `src` must generate the group, which makes
    /// the answer unique.
    fn find_aut(&self, src: [&Self::Elem; 2], dst: [&Self::Elem; 2], caps: &Caps) -> Result<Option<Self::Aut>>;
    fn apply_aut(&self, w: &Self::Aut, x: &Self::Elem) -> Self::Elem;
    fn aut_label(&self, w: &Self::Aut) -> OuterLabel;
    fn format_aut(&self, w: &Self::Aut) -> String;
    /// Automorphisms which together with the inner ones generate `Aut(G)`.
    fn outer_generators(&self, caps: &Caps) -> Result<Vec<Self::Aut>>;
}

fn orders_match<G: FiniteGroup>(g: &G, src: [&G::Elem; 2], dst: [&G::Elem; 2]) -> bool {
    g.elem_order(src[0]) == g.elem_order(dst[0])
        && g.elem_order(src[1]) == g.elem_order(dst[1])
        && g.elem_order(&g.mul(src[0], src[1])) == g.elem_order(&g.mul(dst[0], dst[1]))
}

// ---------------------------------------------------------------------------
// Exhaustive backend: extend the assignment on generators to a homomorphism by BFS.

/// An automorphism as an explicit map on elements.
#[derive(Clone, Debug)]
pub struct MapAut<E> {
    pub map: Arc<HashMap<E, E>>,
    label: String,
}

impl<E: Clone + Eq + std::hash::Hash> MapAut<E> {
    pub fn image(&self, x: &E) -> E {
        self.map[x].clone()
    }
}

fn extend_hom<G: FiniteGroup>(
    g: &G,
    src: [&G::Elem; 2],
    dst: [&G::Elem; 2],
    cap: usize,
) -> Result<Option<HashMap<G::Elem, G::Elem>>> {
    let order = g.order_u64().filter(|&n| n as usize <= cap).ok_or_else(|| {
        Error::Unsupported(format!("{} is too large for exhaustive automorphism search (cap {cap})", g.descriptor()))
    })? as usize;
    let id = g.identity();
    let mut map: HashMap<G::Elem, G::Elem> = HashMap::with_capacity(order);
    map.insert(id.clone(), id.clone());
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        let fx = map[&x].clone();
        for (s, d) in src.iter().zip(dst.iter()) {
            let y = g.mul(&x, s);
            let fy = g.mul(&fx, d);
            match map.get(&y) {
                Some(v) if *v != fy => return Ok(None),
                Some(_) => {}
                None => {
                    map.insert(y.clone(), fy);
                    queue.push_back(y);
                }
            }
        }
    }
    if map.len() != order {
        return Err(Error::Precondition(format!(
            "source pair generates a subgroup of order {} in a group of order {order}",
            map.len()
        )));
    }
    let mut seen = std::collections::HashSet::with_capacity(order);
    if !map.values().all(|v| seen.insert(v)) {
        return Ok(None);
    }
    Ok(Some(map))
}

fn canonical_label<G: FiniteGroup>(g: &G, map: &HashMap<G::Elem, G::Elem>) -> String {
    let gens = g.generators();
    let imgs: Vec<G::Elem> = gens.iter().map(|s| map[s].clone()).collect();
    let best = map
        .keys()
        .map(|h| imgs.iter().map(|x| conj(g, x, h)).collect::<Vec<_>>())
        .min()
        .unwrap_or_default();
    best.iter().map(|x| g.format_elem(x)).collect::<Vec<_>>().join(",")
}

pub fn exhaustive_find<G: FiniteGroup>(
    g: &G,
    src: [&G::Elem; 2],
    dst: [&G::Elem; 2],
    caps: &Caps,
) -> Result<Option<MapAut<G::Elem>>> {
    if !orders_match(g, src, dst) {
        return Ok(None);
    }
    Ok(extend_hom(g, src, dst, caps.table)?.map(|m| {
        let label = canonical_label(g, &m);
        MapAut { map: Arc::new(m), label }
    }))
}

/// One automorphism per outer class, by trying every image of a generating pair.
pub fn exhaustive_outer<G: FiniteGroup>(g: &G, caps: &Caps) -> Result<Vec<MapAut<G::Elem>>> {
    let elems: Vec<G::Elem> = {
        let mut v: Vec<_> = generated_subgroup(g, &g.generators(), caps.table)?.into_iter().collect();
        v.sort();
        v
    };
    let n = elems.len();
    let (s1, s2) = two_generators(g, &elems)?;
    let (o1, o2, o3) = (g.elem_order(&s1), g.elem_order(&s2), g.elem_order(&g.mul(&s1, &s2)));
    let mut out: Vec<MapAut<G::Elem>> = Vec::new();
    let mut labels = std::collections::HashSet::new();
    for x in elems.iter().filter(|x| g.elem_order(x) == o1) {
        for y in elems.iter().filter(|y| g.elem_order(y) == o2) {
            if g.elem_order(&g.mul(x, y)) != o3 {
                continue;
            }
            if let Some(m) = extend_hom(g, [&s1, &s2], [x, y], n)? {
                let label = canonical_label(g, &m);
                if labels.insert(label.clone()) {
                    out.push(MapAut { map: Arc::new(m), label });
                }
            }
        }
    }
    Ok(out)
}

/// A generating pair of a 2-generated group (the listed generators when there are two).
pub fn two_generators<G: FiniteGroup>(g: &G, elems: &[G::Elem]) -> Result<(G::Elem, G::Elem)> {
    let n = elems.len();
    let gens = g.generators();
    let size = |a: &G::Elem, b: &G::Elem| generated_subgroup(g, &[a.clone(), b.clone()], n).map(|s| s.len());
    if gens.len() == 2 && size(&gens[0], &gens[1])? == n {
        return Ok((gens[0].clone(), gens[1].clone()));
    }
    if gens.len() == 1 {
        return Ok((gens[0].clone(), g.identity()));
    }
    if gens.is_empty() {
        return Ok((g.identity(), g.identity()));
    }
    for a in elems {
        for b in elems.iter().filter(|b| *b >= a) {
            if size(a, b)? == n {
                return Ok((a.clone(), b.clone()));
            }
        }
    }
    Err(Error::Unsupported(format!("{} is not 2-generated", g.descriptor())))
}

macro_rules! exhaustive_aut {
    ($ty:ty $(, $p:ident)*) => {
        impl<$($p: FiniteGroup + Clone + 'static),*> AutGroup for $ty {
            type Aut = MapAut<<Self as FiniteGroup>::Elem>;
            fn aut_kind(&self) -> AutKind {
                exhaustive_kind!($ty)
            }
            fn find_aut(&self, src: [&Self::Elem; 2], dst: [&Self::Elem; 2], caps: &Caps) -> Result<Option<Self::Aut>> {
                exhaustive_find(self, src, dst, caps)
            }
            fn apply_aut(&self, w: &Self::Aut, x: &Self::Elem) -> Self::Elem {
                w.image(x)
            }
            fn aut_label(&self, w: &Self::Aut) -> OuterLabel {
                OuterLabel::Exact(w.label.clone())
            }
            fn format_aut(&self, w: &Self::Aut) -> String {
                let gens = self.generators();
                gens.iter()
                    .map(|s| format!("{} -> {}", self.format_elem(s), self.format_elem(&w.image(s))))
                    .collect::<Vec<_>>()
                    .join(", ")
            }
            fn outer_generators(&self, caps: &Caps) -> Result<Vec<Self::Aut>> {
                exhaustive_outer(self, caps)
            }
        }
    };
}

macro_rules! exhaustive_kind {
    (H4<H>) => {
        AutKind::H4Product
    };
    ($t:ty) => {
        AutKind::Exhaustive
    };
}

exhaustive_aut!(Cyclic);
exhaustive_aut!(Metacyclic);
exhaustive_aut!(Affine2);
exhaustive_aut!(TableGroup);
exhaustive_aut!(Product<A, B>, A, B);
exhaustive_aut!(H4<H>, H);

// ---------------------------------------------------------------------------
// Permutation groups: conjugation inside the symmetric group, exhaustive below degree 7.

#[derive(Clone, Debug)]
pub enum PermAut {
    Conj(Perm),
    Map(MapAut<Perm>),
}

fn perm_apply(w: &PermAut, x: &Perm) -> Perm {
    match w {
        PermAut::Conj(h) => h.mul(x).mul(&h.inverse()),
        PermAut::Map(m) => m.image(x),
    }
}

fn perm_format(w: &PermAut) -> String {
    match w {
        PermAut::Conj(h) => format!("conj {}", h.to_cycle_string(1)),
        PermAut::Map(m) => format!("map {}", m.label),
    }
}

fn perm_find<G: FiniteGroup<Elem = Perm>>(
    g: &G,
    n: usize,
    src: [&Perm; 2],
    dst: [&Perm; 2],
    caps: &Caps,
) -> Result<Option<PermAut>> {
    if n <= 6 {
        return Ok(exhaustive_find(g, src, dst, caps)?.map(PermAut::Map));
    }
    if !orders_match(g, src, dst) {
        return Ok(None);
    }
    Ok(find_conjugator((src[0], src[1]), (dst[0], dst[1]), Ambient::Sym, caps.centralizer)?.map(PermAut::Conj))
}

impl AutGroup for Sym {
    type Aut = PermAut;
    fn aut_kind(&self) -> AutKind {
        if self.degree() <= 6 {
            AutKind::Exhaustive
        } else {
            AutKind::InnerOnly
        }
    }
    fn find_aut(&self, src: [&Perm; 2], dst: [&Perm; 2], caps: &Caps) -> Result<Option<PermAut>> {
        perm_find(self, self.degree(), src, dst, caps)
    }
    fn apply_aut(&self, w: &PermAut, x: &Perm) -> Perm {
        perm_apply(w, x)
    }
    fn aut_label(&self, w: &PermAut) -> OuterLabel {
        match w {
            PermAut::Conj(_) => OuterLabel::Inner,
            PermAut::Map(m) => OuterLabel::Exact(m.label.clone()),
        }
    }
    fn format_aut(&self, w: &PermAut) -> String {
        perm_format(w)
    }
    fn outer_generators(&self, caps: &Caps) -> Result<Vec<PermAut>> {
        if self.degree() <= 6 {
            return Ok(exhaustive_outer(self, caps)?.into_iter().map(PermAut::Map).collect());
        }
        Ok(vec![])
    }
}

impl AutGroup for Alt {
    type Aut = PermAut;
    fn aut_kind(&self) -> AutKind {
        if self.degree() <= 6 {
            AutKind::Exhaustive
        } else {
            AutKind::SymConjugation
        }
    }
    fn find_aut(&self, src: [&Perm; 2], dst: [&Perm; 2], caps: &Caps) -> Result<Option<PermAut>> {
        perm_find(self, self.degree(), src, dst, caps)
    }
    fn apply_aut(&self, w: &PermAut, x: &Perm) -> Perm {
        perm_apply(w, x)
    }
    fn aut_label(&self, w: &PermAut) -> OuterLabel {
        match w {
            PermAut::Conj(h) => OuterLabel::Parity(h.parity()),
            PermAut::Map(m) => OuterLabel::Exact(m.label.clone()),
        }
    }
    fn format_aut(&self, w: &PermAut) -> String {
        perm_format(w)
    }
    fn outer_generators(&self, caps: &Caps) -> Result<Vec<PermAut>> {
        if self.degree() <= 6 {
            return Ok(exhaustive_outer(self, caps)?.into_iter().map(PermAut::Map).collect());
        }
        Ok(vec![PermAut::Conj(Perm::from_cycles(self.degree(), &[vec![0, 1]])?)])
    }
}

// ---------------------------------------------------------------------------
// SL(2,p) and PSL(2,p): conjugation by GL(2,p).

fn smallest_nonsquare(p: u32) -> u32 {
    (2..p).find(|&x| !is_square(p, x)).expect("odd prime has a nonsquare")
}

fn gl_label(p: u32, g: &Mat2) -> OuterLabel {
    OuterLabel::Coset(if is_square(p, g.det(p)) { Coset::Sl } else { Coset::Slw })
}

fn gl_conj(p: u32, g: &Mat2, x: &Mat2) -> Mat2 {
    x.conj_by(g, p)
}

impl AutGroup for Sl2 {
    type Aut = Mat2;
    fn aut_kind(&self) -> AutKind {
        AutKind::SlpmConjugation
    }
    fn find_aut(&self, src: [&Mat2; 2], dst: [&Mat2; 2], _caps: &Caps) -> Result<Option<Mat2>> {
        Ok(find_gl_conjugator(self.p(), &[(*src[0], *dst[0]), (*src[1], *dst[1])]))
    }
    fn apply_aut(&self, w: &Mat2, x: &Mat2) -> Mat2 {
        gl_conj(self.p(), w, x)
    }
    fn aut_label(&self, w: &Mat2) -> OuterLabel {
        gl_label(self.p(), w)
    }
    fn format_aut(&self, w: &Mat2) -> String {
        format!("conj {w}")
    }
    fn outer_generators(&self, _caps: &Caps) -> Result<Vec<Mat2>> {
        let p = self.p();
        Ok(vec![Mat2::new(p, smallest_nonsquare(p) as i64, 0, 0, 1)])
    }
}

impl AutGroup for Psl2 {
    type Aut = Mat2;
    fn aut_kind(&self) -> AutKind {
        AutKind::SlpmConjugation
    }
    fn find_aut(&self, src: [&Mat2; 2], dst: [&Mat2; 2], _caps: &Caps) -> Result<Option<Mat2>> {
        let p = self.p();
        for s0 in [false, true] {
            for s1 in [false, true] {
                let d0 = if s0 { dst[0].neg(p) } else { *dst[0] };
                let d1 = if s1 { dst[1].neg(p) } else { *dst[1] };
                if let Some(g) = find_gl_conjugator(p, &[(*src[0], d0), (*src[1], d1)]) {
                    return Ok(Some(g));
                }
            }
        }
        Ok(None)
    }
    fn apply_aut(&self, w: &Mat2, x: &Mat2) -> Mat2 {
        gl_conj(self.p(), w, x).psl_normalize(self.p())
    }
    fn aut_label(&self, w: &Mat2) -> OuterLabel {
        gl_label(self.p(), w)
    }
    fn format_aut(&self, w: &Mat2) -> String {
        format!("conj {w}")
    }
    fn outer_generators(&self, _caps: &Caps) -> Result<Vec<Mat2>> {
        let p = self.p();
        Ok(vec![Mat2::new(p, smallest_nonsquare(p) as i64, 0, 0, 1)])
    }
}

// ---------------------------------------------------------------------------
// (Z/n)²: GL(2, Z/n).

fn det_mod(m: [u32; 4], n: u32) -> u32 {
    let n = n as u64;
    ((m[0] as u64 * m[3] as u64 + n * n - (m[1] as u64 * m[2] as u64) % (n * n)) % n) as u32
}

fn mat_mul_mod(x: [u32; 4], y: [u32; 4], n: u32) -> [u32; 4] {
    let n = n as u64;
    let (x, y) = (x.map(|v| v as u64), y.map(|v| v as u64));
    [
        ((x[0] * y[0] + x[1] * y[2]) % n) as u32,
        ((x[0] * y[1] + x[1] * y[3]) % n) as u32,
        ((x[2] * y[0] + x[3] * y[2]) % n) as u32,
        ((x[2] * y[1] + x[3] * y[3]) % n) as u32,
    ]
}

fn mat_inv_mod(m: [u32; 4], n: u32) -> Option<[u32; 4]> {
    let d = inv_mod(det_mod(m, n) as u64, n as u64)?;
    let nn = n as u64;
    let neg = |v: u32| (nn - v as u64 % nn) % nn;
    Some([
        ((m[3] as u64 * d) % nn) as u32,
        ((neg(m[1]) * d) % nn) as u32,
        ((neg(m[2]) * d) % nn) as u32,
        ((m[0] as u64 * d) % nn) as u32,
    ])
}

impl AutGroup for Ab2 {
    /// Row-major matrix acting on column vectors.
    type Aut = [u32; 4];
    fn aut_kind(&self) -> AutKind {
        AutKind::Gl2Action
    }
    fn find_aut(&self, src: [&(u32, u32); 2], dst: [&(u32, u32); 2], _caps: &Caps) -> Result<Option<[u32; 4]>> {
        let n = self.modulus();
        let s = [src[0].0, src[1].0, src[0].1, src[1].1];
        let d = [dst[0].0, dst[1].0, dst[0].1, dst[1].1];
        let si = mat_inv_mod(s, n).ok_or_else(|| Error::Precondition("source pair does not generate (Z/n)²".into()))?;
        let m = mat_mul_mod(d, si, n);
        Ok(Some(m).filter(|m| gcd(det_mod(*m, n) as u64, n as u64) == 1))
    }
    fn apply_aut(&self, w: &[u32; 4], x: &(u32, u32)) -> (u32, u32) {
        let n = self.modulus() as u64;
        let (a, b) = (x.0 as u64, x.1 as u64);
        (((w[0] as u64 * a + w[1] as u64 * b) % n) as u32, ((w[2] as u64 * a + w[3] as u64 * b) % n) as u32)
    }
    fn aut_label(&self, w: &[u32; 4]) -> OuterLabel {
        OuterLabel::Exact(format!("[[{},{}],[{},{}]]", w[0], w[1], w[2], w[3]))
    }
    fn format_aut(&self, w: &[u32; 4]) -> String {
        format!("[[{},{}],[{},{}]] mod {}", w[0], w[1], w[2], w[3], self.modulus())
    }
    fn outer_generators(&self, _caps: &Caps) -> Result<Vec<[u32; 4]>> {
        let n = self.modulus();
        let mut out = vec![[1, 1 % n, 0, 1], [1, 0, 1 % n, 1]];
        for u in (2..n).filter(|&u| gcd(u as u64, n as u64) == 1) {
            out.push([u, 0, 0, 1]);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::build_catalogue_group;

    fn outer_count<G: AutGroup>(g: &G) -> usize {
        exhaustive_outer(g, &Caps::default()).unwrap().len()
    }

    #[test]
    fn outer_automorphism_counts() {
        // |Out| of S4, A5, D4, Q8, S6
        assert_eq!(outer_count(&Sym::new(4).unwrap()), 1);
        assert_eq!(outer_count(&Alt::new(5).unwrap()), 2);
        assert_eq!(outer_count(&Metacyclic::dihedral(4).unwrap()), 2);
        assert_eq!(outer_count(&Metacyclic::dicyclic(2).unwrap()), 6);
        assert_eq!(outer_count(&Sym::new(6).unwrap()), 2);
        assert_eq!(outer_count(&build_catalogue_group("A4", 100).unwrap()), 2);
    }

    #[test]
    fn backends_agree_with_exhaustive() {
        let caps = Caps::default();
        let g = Sl2::new(5).unwrap();
        let (b, s) = (Mat2::new(5, 0, 1, -1, 0), Mat2::new(5, 0, -1, 1, 1));
        let w = Mat2::new(5, 2, 0, 0, 1);
        let (bi, si) = (g.apply_aut(&w, &b), g.apply_aut(&w, &s));
        let found = g.find_aut([&b, &s], [&bi, &si], &caps).unwrap().unwrap();
        assert_eq!(g.aut_label(&found), OuterLabel::Coset(Coset::Slw));
        let ex = exhaustive_find(&g, [&b, &s], [&bi, &si], &caps).unwrap().unwrap();
        assert_eq!(ex.image(&b), bi);
        let a = Ab2::new(5).unwrap();
        let m = a.find_aut([&(1, 0), &(0, 1)], [&(4, 0), &(0, 4)], &caps).unwrap().unwrap();
        assert_eq!(a.apply_aut(&m, &(2, 3)), (3, 2));
        let s7 = Sym::new(7).unwrap();
        let x = s7.parse_elem("(1,2)").unwrap();
        let y = s7.parse_elem("(1,2,3,4,5,6,7)").unwrap();
        let h = s7.parse_elem("(3,5)").unwrap();
        let w = s7.find_aut([&x, &y], [&conj(&s7, &x, &h), &conj(&s7, &y, &h)], &caps).unwrap().unwrap();
        assert_eq!(s7.apply_aut(&w, &s7.parse_elem("(2,3)").unwrap()), s7.parse_elem("(2,5)").unwrap());
    }
}
