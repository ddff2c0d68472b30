//! Group descriptors: the JSON/shorthand names of every supported group, and dispatch from a
//! descriptor to a concrete backend.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize};

use crate::aut::AutGroup;
use crate::caps::Caps;
use crate::constructions::{build_catalogue_group, wallpaper_quotient_with, Ab2, WallpaperAction, H4};
use crate::error::{Error, Result};
use crate::matrix::{Psl2, Sl2};
use crate::perm::{Alt, Sym};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GroupDescriptor {
    Sym { n: usize },
    Alt { n: usize },
    Sl2 { p: u32 },
    Psl2 { p: u32 },
    Ab2 { n: u32 },
    H4 { inner: Box<GroupDescriptor> },
    Wallpaper {
        d: u32,
        m: u32,
        #[serde(default, skip_serializing_if = "std::ops::Not::not")]
        printed: bool,
    },
    Catalogue { id: String },
}

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum Tagged {
    Sym { n: usize },
    Alt { n: usize },
    Sl2 { p: u32 },
    Psl2 { p: u32 },
    Ab2 { n: u32 },
    H4 { inner: Box<GroupDescriptor> },
    Wallpaper {
        d: u32,
        m: u32,
        #[serde(default)]
        printed: bool,
    },
    Catalogue { id: String },
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Repr {
    Short(String),
    Full(Tagged),
}

impl<'de> Deserialize<'de> for GroupDescriptor {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let d = match Repr::deserialize(de)? {
            Repr::Short(s) => s.parse().map_err(serde::de::Error::custom)?,
            Repr::Full(t) => match t {
                Tagged::Sym { n } => GroupDescriptor::Sym { n },
                Tagged::Alt { n } => GroupDescriptor::Alt { n },
                Tagged::Sl2 { p } => GroupDescriptor::Sl2 { p },
                Tagged::Psl2 { p } => GroupDescriptor::Psl2 { p },
                Tagged::Ab2 { n } => GroupDescriptor::Ab2 { n },
                Tagged::H4 { inner } => GroupDescriptor::H4 { inner },
                Tagged::Wallpaper { d, m, printed } => GroupDescriptor::Wallpaper { d, m, printed },
                Tagged::Catalogue { id } => GroupDescriptor::Catalogue { id },
            },
        };
        d.validate().map_err(serde::de::Error::custom)?;
        Ok(d)
    }
}

impl GroupDescriptor {
    /// Kind-specific parameter constraints.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidParameter(m));
        match self {
            GroupDescriptor::Sym { n } | GroupDescriptor::Alt { n } if *n == 0 => bad("degree must be ≥ 1".into()),
            GroupDescriptor::Sl2 { p } | GroupDescriptor::Psl2 { p } => crate::matrix::check_odd_prime(*p),
            GroupDescriptor::Ab2 { n } if *n < 2 => bad("ab2 needs n ≥ 2".into()),
            GroupDescriptor::Wallpaper { d, m, .. } if ![3, 4, 6].contains(d) || *m < 2 => {
                bad(format!("wallpaper needs d in {{3,4,6}} and m ≥ 2, got d={d} m={m}"))
            }
            GroupDescriptor::H4 { inner } => match **inner {
                GroupDescriptor::H4 { .. } => bad("nested h4 is not supported".into()),
                ref d => d.validate(),
            },
            _ => Ok(()),
        }
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupDescriptor::Sym { n } => write!(f, "sym:{n}"),
            GroupDescriptor::Alt { n } => write!(f, "alt:{n}"),
            GroupDescriptor::Sl2 { p } => write!(f, "sl2:{p}"),
            GroupDescriptor::Psl2 { p } => write!(f, "psl2:{p}"),
            GroupDescriptor::Ab2 { n } => write!(f, "ab2:{n}"),
            GroupDescriptor::H4 { inner } => write!(f, "h4:{inner}"),
            GroupDescriptor::Wallpaper { d, m, printed } => {
                write!(f, "wallpaper:{d}:{m}")?;
                if *printed {
                    f.write_str(":printed")?;
                }
                Ok(())
            }
            GroupDescriptor::Catalogue { id } => write!(f, "catalogue:{id}"),
        }
    }
}

impl FromStr for GroupDescriptor {
    type Err = Error;
    /// Either JSON (`{"kind":"sl2","p":7}`) or shorthand (`sl2:7`, `h4:sl2:11`, `wallpaper:3:4`).
    fn from_str(s: &str) -> Result<GroupDescriptor> {
        let s = s.trim();
        if s.starts_with('{') {
            return Ok(serde_json::from_str(s)?);
        }
        let num = |t: &str| -> Result<u64> {
            t.trim().parse().map_err(|_| Error::InvalidParameter(format!("bad number {t:?} in group {s:?}")))
        };
        let (kind, rest) = s.split_once(':').unwrap_or((s, ""));
        let d = match kind.to_ascii_lowercase().as_str() {
            "sym" => GroupDescriptor::Sym { n: num(rest)? as usize },
            "alt" => GroupDescriptor::Alt { n: num(rest)? as usize },
            "sl2" => GroupDescriptor::Sl2 { p: num(rest)? as u32 },
            "psl2" => GroupDescriptor::Psl2 { p: num(rest)? as u32 },
            "ab2" => GroupDescriptor::Ab2 { n: num(rest)? as u32 },
            "h4" => GroupDescriptor::H4 { inner: Box::new(rest.parse()?) },
            "wallpaper" => {
                let parts: Vec<&str> = rest.split(':').collect();
                match parts.as_slice() {
                    [d, m] => GroupDescriptor::Wallpaper { d: num(d)? as u32, m: num(m)? as u32, printed: false },
                    [d, m, "printed"] => GroupDescriptor::Wallpaper { d: num(d)? as u32, m: num(m)? as u32, printed: true },
                    _ => return Err(Error::InvalidParameter(format!("expected wallpaper:d:m, got {s:?}"))),
                }
            }
            "catalogue" | "cat" if !rest.is_empty() => GroupDescriptor::Catalogue { id: rest.to_string() },
            _ => return Err(Error::InvalidParameter(format!("unknown group {s:?}"))),
        };
        d.validate()?;
        Ok(d)
    }
}

/// A computation generic over the backend group.
pub trait GroupVisitor {
    type Output;
    fn visit<G: AutGroup>(self, g: &G) -> Self::Output;
}

/// Build the group a descriptor names and run `v` on it.
pub fn with_group<V: GroupVisitor>(d: &GroupDescriptor, caps: &Caps, v: V) -> Result<V::Output> {
    match d {
        GroupDescriptor::H4 { inner } => with_base_group(inner, caps, H4Lift(v)),
        _ => with_base_group(d, caps, v),
    }
}

struct H4Lift<V>(V);

impl<V: GroupVisitor> GroupVisitor for H4Lift<V> {
    type Output = V::Output;
    fn visit<G: AutGroup>(self, g: &G) -> V::Output {
        self.0.visit(&H4::new(g.clone()))
    }
}

/// Like [`with_group`] for every kind except `h4`, which is rejected. Lets callers that need the
/// inner group of an `H_[4]` get at it directly.
pub fn with_base_group<V: GroupVisitor>(d: &GroupDescriptor, caps: &Caps, v: V) -> Result<V::Output> {
    d.validate()?;
    Ok(match d {
        GroupDescriptor::Sym { n } => v.visit(&Sym::new(*n)?),
        GroupDescriptor::Alt { n } => v.visit(&Alt::new(*n)?),
        GroupDescriptor::Sl2 { p } => v.visit(&Sl2::new(*p)?),
        GroupDescriptor::Psl2 { p } => v.visit(&Psl2::new(*p)?),
        GroupDescriptor::Ab2 { n } => v.visit(&Ab2::new(*n)?),
        GroupDescriptor::Wallpaper { d, m, printed } => {
            let action = if *printed { WallpaperAction::Printed } else { WallpaperAction::Geometric };
            v.visit(&wallpaper_quotient_with(*d, *m, action)?)
        }
        GroupDescriptor::Catalogue { id } => v.visit(&build_catalogue_group(id, caps.table)?),
        GroupDescriptor::H4 { .. } => {
            return Err(Error::Unsupported("h4 groups must go through with_group".into()))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_forms() {
        let cases = [
            (r#"{"kind":"sl2","p":7}"#, GroupDescriptor::Sl2 { p: 7 }),
            (r#"{"kind":"sym","n":8}"#, GroupDescriptor::Sym { n: 8 }),
            (r#"{"kind":"ab2","n":5}"#, GroupDescriptor::Ab2 { n: 5 }),
            (r#"{"kind":"wallpaper","d":3,"m":4}"#, GroupDescriptor::Wallpaper { d: 3, m: 4, printed: false }),
            (
                r#"{"kind":"h4","inner":{"kind":"sl2","p":11}}"#,
                GroupDescriptor::H4 { inner: Box::new(GroupDescriptor::Sl2 { p: 11 }) },
            ),
        ];
        for (text, want) in cases {
            let d: GroupDescriptor = serde_json::from_str(text).unwrap();
            assert_eq!(d, want);
            assert_eq!(serde_json::to_string(&d).unwrap(), text);
            assert_eq!(d.to_string().parse::<GroupDescriptor>().unwrap(), d);
        }
    }

    #[test]
    fn shorthand() {
        assert_eq!("ab2:5".parse::<GroupDescriptor>().unwrap(), GroupDescriptor::Ab2 { n: 5 });
        let h: GroupDescriptor = "h4:sl2:11".parse().unwrap();
        assert_eq!(h.to_string(), "h4:sl2:11");
        let from_json: GroupDescriptor = serde_json::from_str(r#""psl2:7""#).unwrap();
        assert_eq!(from_json, GroupDescriptor::Psl2 { p: 7 });
        assert!("sl2:9".parse::<GroupDescriptor>().is_err());
        assert!("wallpaper:5:3".parse::<GroupDescriptor>().is_err());
        assert!("h4:h4:sl2:5".parse::<GroupDescriptor>().is_err());
        assert!(serde_json::from_str::<GroupDescriptor>(r#"{"kind":"sl2","p":8}"#).is_err());
    }
}
