use num_bigint::BigUint;
use rand::Rng;

use super::parse_int_tuple;
use crate::descriptor::GroupDescriptor;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// `(Z/n)²`, written additively; literals `(x,y)`.
#[derive(Clone, Debug)]
pub struct Ab2 {
    n: u32,
}

impl Ab2 {
    pub fn new(n: u32) -> Result<Ab2> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!("(Z/{n})² needs n ≥ 2")));
        }
        Ok(Ab2 { n })
    }
    pub fn modulus(&self) -> u32 {
        self.n
    }
}

pub fn abelian_rank2(n: u32) -> Result<Ab2> {
    Ab2::new(n)
}

impl FiniteGroup for Ab2 {
    type Elem = (u32, u32);
    fn identity(&self) -> (u32, u32) {
        (0, 0)
    }
    fn mul(&self, x: &(u32, u32), y: &(u32, u32)) -> (u32, u32) {
        ((x.0 + y.0) % self.n, (x.1 + y.1) % self.n)
    }
    fn inv(&self, x: &(u32, u32)) -> (u32, u32) {
        ((self.n - x.0) % self.n, (self.n - x.1) % self.n)
    }
    fn generators(&self) -> Vec<(u32, u32)> {
        vec![(1, 0), (0, 1)]
    }
    fn order(&self) -> BigUint {
        BigUint::from(self.n as u64 * self.n as u64)
    }
    fn contains(&self, x: &(u32, u32)) -> bool {
        x.0 < self.n && x.1 < self.n
    }
    fn parse_elem(&self, s: &str) -> Result<(u32, u32)> {
        match parse_int_tuple(s).as_deref() {
            Some([x, y]) => {
                let n = self.n as i64;
                Ok((x.rem_euclid(n) as u32, y.rem_euclid(n) as u32))
            }
            _ => Err(Error::Malformed(format!("expected (x,y), got {s:?}"))),
        }
    }
    fn format_elem(&self, x: &(u32, u32)) -> String {
        format!("({},{})", x.0, x.1)
    }
    fn descriptor(&self) -> GroupDescriptor {
        GroupDescriptor::Ab2 { n: self.n }
    }
    fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R) -> (u32, u32) {
        (rng.gen_range(0..self.n), rng.gen_range(0..self.n))
    }
    fn elem_order(&self, x: &(u32, u32)) -> u64 {
        let n = self.n as u64;
        let o = |v: u32| n / crate::arith::gcd(v as u64, n);
        crate::arith::lcm(o(x.0), o(x.1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::element_order;

    #[test]
    fn basics() {
        let g = Ab2::new(5).unwrap();
        assert_eq!(g.order(), BigUint::from(25u32));
        assert_eq!(Ab2::new(2).unwrap().order(), BigUint::from(4u32));
        assert_eq!(element_order(&g, &(1, 0)).unwrap(), 5);
        assert_eq!(g.parse_elem("(-1, 7)").unwrap(), (4, 2));
        assert!(g.parse_elem("(1)").is_err());
        assert!(element_order(&g, &(5, 0)).is_err());
        assert!(Ab2::new(1).is_err());
    }
}
