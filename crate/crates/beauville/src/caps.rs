//! Budgets for the expensive algorithms. Overridable through `BV_CAPS`,
//! e.g. `BV_CAPS=closure=2000000,centralizer=100000`.

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest subgroup closure attempted.
    pub closure: usize,
    /// Largest conjugacy class enumerated.
    pub class: usize,
    /// Largest centralizer enumerated by the conjugator search.
    pub centralizer: usize,
    /// Largest orbit enumerated by orbit searches.
    pub orbit: usize,
    /// Largest group turned into a multiplication table for enumeration.
    pub table: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            closure: 1_000_000,
            class: 1_000_000,
            centralizer: 10_000_000,
            orbit: 1_000_000,
            table: 2500,
        }
    }
}

impl Caps {
    pub fn parse(spec: &str) -> Result<Caps> {
        let mut caps = Caps::default();
        for part in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, val) = part
                .split_once('=')
                .ok_or_else(|| Error::InvalidParameter(format!("bad cap entry {part:?}")))?;
            let val: usize = val
                .trim()
                .replace('_', "")
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("bad cap value {part:?}")))?;
            match key.trim() {
                "closure" => caps.closure = val,
                "class" => caps.class = val,
                "centralizer" => caps.centralizer = val,
                "orbit" => caps.orbit = val,
                "table" => caps.table = val,
                other => return Err(Error::InvalidParameter(format!("unknown cap {other:?}"))),
            }
        }
        Ok(caps)
    }

    /// Defaults overridden by the `BV_CAPS` environment variable when set.
    pub fn from_env() -> Result<Caps> {
        match std::env::var("BV_CAPS") {
            Ok(s) => Caps::parse(&s),
            Err(_) => Ok(Caps::default()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_overrides() {
        let c = Caps::parse("closure=10, table=7").unwrap();
        assert_eq!(c.closure, 10);
        assert_eq!(c.table, 7);
        assert_eq!(c.class, Caps::default().class);
        assert!(Caps::parse("bogus=1").is_err());
        assert!(Caps::parse("closure").is_err());
    }
}
