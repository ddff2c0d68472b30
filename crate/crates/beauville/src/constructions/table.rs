use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigUint;
use rand::Rng;

use crate::descriptor::GroupDescriptor;
use crate::error::{Error, Result};
use crate::group::{generated_subgroup, FiniteGroup};

/// A finite group given by its multiplication table. Element 0 is the identity.
#[derive(Clone, Debug)]
pub struct TableGroup {
    n: usize,
    table: Arc<Vec<u32>>,
    inv: Arc<Vec<u32>>,
    ord: Arc<Vec<u32>>,
    gens: Vec<u32>,
    class_of: Arc<Vec<u32>>,
    classes: Arc<Vec<Vec<u32>>>,
    labels: Arc<Vec<String>>,
    by_label: Arc<HashMap<String, u32>>,
    desc: GroupDescriptor,
}

impl TableGroup {
    /// Tabulate `⟨generators⟩` of `g`. Returns the table and the element behind each index.
    pub fn from_group<G: FiniteGroup>(g: &G, cap: usize) -> Result<(TableGroup, Vec<G::Elem>)> {
        let gens = g.generators();
        let set = generated_subgroup(g, &gens, cap)?;
        let id = g.identity();
        let mut elems: Vec<G::Elem> = set.into_iter().filter(|x| *x != id).collect();
        elems.sort();
        elems.insert(0, id);
        let index: HashMap<&G::Elem, u32> = elems.iter().enumerate().map(|(i, x)| (x, i as u32)).collect();
        let n = elems.len();
        let mut table = vec![0u32; n * n];
        for (i, x) in elems.iter().enumerate() {
            for (j, y) in elems.iter().enumerate() {
                table[i * n + j] = index[&g.mul(x, y)];
            }
        }
        let gen_idx = gens.iter().map(|s| index[s]).collect();
        let labels = elems.iter().map(|x| g.format_elem(x)).collect();
        let t = TableGroup::from_table(n, table, gen_idx, labels, g.descriptor())?;
        Ok((t, elems))
    }

    pub fn from_table(
        n: usize,
        table: Vec<u32>,
        gens: Vec<u32>,
        labels: Vec<String>,
        desc: GroupDescriptor,
    ) -> Result<TableGroup> {
        if table.len() != n * n || labels.len() != n || n == 0 {
            return Err(Error::InvalidParameter("table dimensions do not match".into()));
        }
        if (0..n).any(|i| table[i] != i as u32 || table[i * n] != i as u32) {
            return Err(Error::InvalidParameter("element 0 is not the identity".into()));
        }
        let mut inv = vec![u32::MAX; n];
        for i in 0..n {
            for j in 0..n {
                if table[i * n + j] == 0 {
                    inv[i] = j as u32;
                    break;
                }
            }
        }
        if inv.contains(&u32::MAX) {
            return Err(Error::InvalidParameter("table has an element without inverse".into()));
        }
        let mut ord = vec![0u32; n];
        for i in 0..n {
            let mut y = i;
            let mut k = 1;
            while y != 0 {
                y = table[y * n + i] as usize;
                k += 1;
            }
            ord[i] = k;
        }
        // conjugacy classes by union-find over conjugation by generators
        let mut parent: Vec<u32> = (0..n as u32).collect();
        fn find(p: &mut [u32], mut x: u32) -> u32 {
            while p[x as usize] != x {
                p[x as usize] = p[p[x as usize] as usize];
                x = p[x as usize];
            }
            x
        }
        for x in 0..n {
            for &s in &gens {
                let s = s as usize;
                let y = table[table[s * n + x] as usize * n + inv[s] as usize];
                let (rx, ry) = (find(&mut parent, x as u32), find(&mut parent, y));
                if rx != ry {
                    parent[rx.max(ry) as usize] = rx.min(ry);
                }
            }
        }
        let mut class_of = vec![0u32; n];
        let mut classes: Vec<Vec<u32>> = Vec::new();
        let mut root_id = HashMap::new();
        for x in 0..n {
            let r = find(&mut parent, x as u32);
            let id = *root_id.entry(r).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() as u32 - 1
            });
            class_of[x] = id;
            classes[id as usize].push(x as u32);
        }
        let by_label = labels.iter().enumerate().map(|(i, l)| (l.clone(), i as u32)).collect();
        Ok(TableGroup {
            n,
            table: Arc::new(table),
            inv: Arc::new(inv),
            ord: Arc::new(ord),
            gens,
            class_of: Arc::new(class_of),
            classes: Arc::new(classes),
            labels: Arc::new(labels),
            by_label: Arc::new(by_label),
            desc,
        })
    }

    pub fn with_descriptor(mut self, desc: GroupDescriptor) -> Self {
        self.desc = desc;
        self
    }

    /// The subgroup on `members` (parent indices, closed under multiplication) with the given
    /// generators. Returns the table and the parent index of each new index.
    pub fn subgroup(&self, members: &[u32], gens: &[u32]) -> Result<(TableGroup, Vec<u32>)> {
        let mut m: Vec<u32> = members.iter().copied().filter(|&x| x != 0).collect();
        m.sort_unstable();
        m.dedup();
        m.insert(0, 0);
        let mut local = vec![u32::MAX; self.n];
        for (i, &x) in m.iter().enumerate() {
            local[x as usize] = i as u32;
        }
        let k = m.len();
        let mut table = vec![0u32; k * k];
        for (i, &x) in m.iter().enumerate() {
            for (j, &y) in m.iter().enumerate() {
                let z = local[self.m(x, y) as usize];
                if z == u32::MAX {
                    return Err(Error::InvalidParameter("subgroup members are not closed".into()));
                }
                table[i * k + j] = z;
            }
        }
        let g = gens.iter().map(|&s| local[s as usize]).collect::<Vec<_>>();
        if g.contains(&u32::MAX) {
            return Err(Error::InvalidParameter("subgroup generator outside members".into()));
        }
        let labels = m.iter().map(|&x| self.labels[x as usize].clone()).collect();
        let t = TableGroup::from_table(k, table, g, labels, self.desc.clone())?;
        Ok((t, m))
    }

    pub fn size(&self) -> usize {
        self.n
    }
    #[inline]
    pub fn m(&self, x: u32, y: u32) -> u32 {
        self.table[x as usize * self.n + y as usize]
    }
    #[inline]
    pub fn inverse(&self, x: u32) -> u32 {
        self.inv[x as usize]
    }
    #[inline]
    pub fn ord(&self, x: u32) -> u32 {
        self.ord[x as usize]
    }
    #[inline]
    pub fn class_of(&self, x: u32) -> u32 {
        self.class_of[x as usize]
    }
    pub fn classes(&self) -> &[Vec<u32>] {
        &self.classes
    }
    pub fn label(&self, x: u32) -> &str {
        &self.labels[x as usize]
    }
    pub fn gens(&self) -> &[u32] {
        &self.gens
    }
    /// `h x h⁻¹`.
    #[inline]
    pub fn conj(&self, x: u32, h: u32) -> u32 {
        self.m(self.m(h, x), self.inverse(h))
    }
    pub fn power(&self, x: u32, k: u64) -> u32 {
        let k = k % self.ord(x) as u64;
        (0..k).fold(0, |acc, _| self.m(acc, x))
    }
    /// Size of `⟨gens⟩`, stopping early once it reaches `stop`.
    pub fn closure_size(&self, gens: &[u32], stop: usize) -> usize {
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut stack = vec![0u32];
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &s in gens {
                let y = self.m(x, s);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    count += 1;
                    if count >= stop {
                        return count;
                    }
                    stack.push(y);
                }
            }
        }
        count
    }
    pub fn closure(&self, gens: &[u32]) -> Vec<u32> {
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut out = vec![0u32];
        let mut i = 0;
        while i < out.len() {
            let x = out[i];
            for &s in gens {
                let y = self.m(x, s);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    out.push(y);
                }
            }
            i += 1;
        }
        out.sort_unstable();
        out
    }
    pub fn generates_pair(&self, a: u32, c: u32) -> bool {
        self.closure_size(&[a, c], self.n) == self.n
    }
    pub fn is_abelian(&self) -> bool {
        let g = &self.gens;
        g.iter().all(|&x| g.iter().all(|&y| self.m(x, y) == self.m(y, x)))
    }
}

impl FiniteGroup for TableGroup {
    type Elem = u32;
    fn identity(&self) -> u32 {
        0
    }
    fn mul(&self, x: &u32, y: &u32) -> u32 {
        self.m(*x, *y)
    }
    fn inv(&self, x: &u32) -> u32 {
        self.inverse(*x)
    }
    fn generators(&self) -> Vec<u32> {
        self.gens.clone()
    }
    fn order(&self) -> BigUint {
        BigUint::from(self.n)
    }
    fn contains(&self, x: &u32) -> bool {
        (*x as usize) < self.n
    }
    fn parse_elem(&self, s: &str) -> Result<u32> {
        let t = s.trim();
        if let Some(i) = t.strip_prefix('#') {
            let i: usize = i.parse().map_err(|_| Error::Malformed(format!("bad table index {s:?}")))?;
            if i >= self.n {
                return Err(Error::Malformed(format!("table index {i} out of range")));
            }
            return Ok(i as u32);
        }
        let key: String = t.chars().filter(|c| !c.is_whitespace()).collect();
        self.by_label
            .get(&key)
            .or_else(|| self.by_label.get(t))
            .copied()
            .ok_or_else(|| Error::Malformed(format!("{s:?} is not an element of {}", self.desc)))
    }
    fn format_elem(&self, x: &u32) -> String {
        self.labels[*x as usize].clone()
    }
    fn descriptor(&self) -> GroupDescriptor {
        self.desc.clone()
    }
    fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R) -> u32 {
        rng.gen_range(0..self.n as u32)
    }
    fn elem_order(&self, x: &u32) -> u64 {
        self.ord(*x) as u64
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::conjugacy_class;
    use crate::perm::Sym;

    #[test]
    fn s4_table() {
        let s4 = Sym::new(4).unwrap();
        let (t, elems) = TableGroup::from_group(&s4, 100).unwrap();
        assert_eq!(t.size(), 24);
        assert_eq!(t.classes().len(), 5);
        for x in 0..24u32 {
            assert_eq!(t.ord(x) as u64, elems[x as usize].order());
            let cls = conjugacy_class(&s4, &elems[x as usize], 100).unwrap();
            assert_eq!(cls.len(), t.classes()[t.class_of(x) as usize].len());
        }
        let x = t.parse_elem("(1,2,3)").unwrap();
        assert_eq!(t.format_elem(&x), "(1,2,3)");
        assert_eq!(t.parse_elem(&format!("#{x}")).unwrap(), x);
        let a4: Vec<u32> = (0..24).filter(|&x| elems[x as usize].parity() == crate::perm::Parity::Even).collect();
        let (sub, map) = t.subgroup(&a4, &[x]).unwrap();
        assert_eq!(sub.size(), 12);
        assert_eq!(map.len(), 12);
        assert_eq!(sub.closure_size(&[0], 12), 1);
    }
}
