//! Structure files: the JSON form of unmixed structures, mixed quadruples and single generating
//! pairs, with element literals in each backend's syntax.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::aut::AutGroup;
use crate::beauville::{check_mixed, check_mixed_h4, check_unmixed, pair_metrics, CheckReport, G0Spec, PairMetrics};
use crate::caps::Caps;
use crate::constructions::H4;
use crate::descriptor::{with_base_group, with_group, GroupDescriptor, GroupVisitor};
use crate::error::{Error, Result};
use crate::reality::{lemma_rea_cases, reality_mixed_exhaustive, reality_mixed_h4, reality_unmixed, ReaCase, RealityVerdict};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Structure {
    Unmixed {
        group: GroupDescriptor,
        a1: String,
        c1: String,
        a2: String,
        c2: String,
        #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
        extra: BTreeMap<String, String>,
    },
    Mixed {
        group: GroupDescriptor,
        #[serde(default)]
        g0: G0Spec,
        a: String,
        c: String,
        g: String,
        /// Use the generation hypothesis for perfect `H` in the `H_[4]` certificate.
        #[serde(default, skip_serializing_if = "std::ops::Not::not")]
        perfect: bool,
        #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
        extra: BTreeMap<String, String>,
    },
    Pair {
        group: GroupDescriptor,
        a: String,
        c: String,
        #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
        extra: BTreeMap<String, String>,
    },
}

/// Output of [`Structure::reality`]: a verdict for structures, the case table for a pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum RealityOutput {
    Verdict(RealityVerdict),
    Cases { cases: Vec<ReaCase> },
}

impl Structure {
    pub fn from_json(s: &str) -> Result<Structure> {
        let st: Structure = serde_json::from_str(s)?;
        st.group().validate()?;
        Ok(st)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("structures serialize")
    }

    pub fn group(&self) -> &GroupDescriptor {
        match self {
            Structure::Unmixed { group, .. } | Structure::Mixed { group, .. } | Structure::Pair { group, .. } => group,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Unmixed { .. } => "unmixed",
            Structure::Mixed { .. } => "mixed",
            Structure::Pair { .. } => "pair",
        }
    }

    fn literals(&self) -> Vec<&str> {
        match self {
            Structure::Unmixed { a1, c1, a2, c2, .. } => vec![a1, c1, a2, c2],
            Structure::Mixed { a, c, g, .. } => vec![a, c, g],
            Structure::Pair { a, c, .. } => vec![a, c],
        }
    }

    /// Parse every element literal and re-emit it canonically.
    pub fn normalized(&self, caps: &Caps) -> Result<Structure> {
        struct V<'a>(&'a Structure);
        impl GroupVisitor for V<'_> {
            type Output = Result<Vec<String>>;
            fn visit<G: AutGroup>(self, g: &G) -> Self::Output {
                self.0.literals().iter().map(|s| Ok(g.format_elem(&g.parse_elem(s)?))).collect()
            }
        }
        let lits = with_group(self.group(), caps, V(self))??;
        let mut out = self.clone();
        match &mut out {
            Structure::Unmixed { a1, c1, a2, c2, .. } => {
                [*a1, *c1, *a2, *c2] = [lits[0].clone(), lits[1].clone(), lits[2].clone(), lits[3].clone()];
            }
            Structure::Mixed { a, c, g, .. } => {
                [*a, *c, *g] = [lits[0].clone(), lits[1].clone(), lits[2].clone()];
            }
            Structure::Pair { a, c, .. } => {
                [*a, *c] = [lits[0].clone(), lits[1].clone()];
            }
        }
        Ok(out)
    }

    /// Type and classification of each generating pair.
    pub fn metrics(&self, caps: &Caps) -> Result<Vec<PairMetrics>> {
        struct V<'a>(&'a Structure);
        impl GroupVisitor for V<'_> {
            type Output = Result<Vec<PairMetrics>>;
            fn visit<G: AutGroup>(self, g: &G) -> Self::Output {
                let e = parse_all(g, self.0)?;
                match self.0 {
                    Structure::Unmixed { .. } => Ok(vec![pair_metrics(g, &e[0], &e[1])?, pair_metrics(g, &e[2], &e[3])?]),
                    _ => Ok(vec![pair_metrics(g, &e[0], &e[1])?]),
                }
            }
        }
        with_group(self.group(), caps, V(self))?
    }

    /// Run the structure checks appropriate to the kind.
    pub fn check(&self, caps: &Caps) -> Result<CheckReport> {
        match self {
            Structure::Pair { .. } => Err(Error::InvalidParameter("a single pair is not a structure; nothing to check".into())),
            Structure::Unmixed { group, .. } => {
                struct V<'a>(&'a Structure, Caps);
                impl GroupVisitor for V<'_> {
                    type Output = Result<CheckReport>;
                    fn visit<G: AutGroup>(self, g: &G) -> Self::Output {
                        let e = parse_all(g, self.0)?;
                        check_unmixed(g, &e[0], &e[1], &e[2], &e[3], &self.1)
                    }
                }
                with_group(group, caps, V(self, *caps))?
            }
            Structure::Mixed { group, g0, perfect, .. } => match group {
                GroupDescriptor::H4 { inner } => {
                    struct V<'a>(&'a Structure, G0Spec, bool, Caps);
                    impl GroupVisitor for V<'_> {
                        type Output = Result<CheckReport>;
                        fn visit<G: AutGroup>(self, h: &G) -> Self::Output {
                            let g = H4::new(h.clone());
                            let e = parse_all(&g, self.0)?;
                            check_mixed_h4(&g, self.1, &e[0], &e[1], &e[2], self.2, &self.3)
                        }
                    }
                    with_base_group(inner, caps, V(self, *g0, *perfect, *caps))?
                }
                _ => {
                    if *g0 == G0Spec::H2 {
                        return Err(Error::InvalidParameter("g0 = h2 needs an h4 group".into()));
                    }
                    struct V<'a>(&'a Structure, Caps);
                    impl GroupVisitor for V<'_> {
                        type Output = Result<CheckReport>;
                        fn visit<G: AutGroup>(self, g: &G) -> Self::Output {
                            let e = parse_all(g, self.0)?;
                            check_mixed(g, &e[0], &e[1], &e[2], &self.1)
                        }
                    }
                    with_group(group, caps, V(self, *caps))?
                }
            },
        }
    }

    /// Reality analysis: a verdict for structures, the six-case table for a single pair.
    pub fn reality(&self, caps: &Caps) -> Result<RealityOutput> {
        match self {
            Structure::Mixed { group: GroupDescriptor::H4 { inner }, g0: G0Spec::H2, .. } => {
                struct V<'a>(&'a Structure, Caps);
                impl GroupVisitor for V<'_> {
                    type Output = Result<RealityVerdict>;
                    fn visit<G: AutGroup>(self, h: &G) -> Self::Output {
                        let g = H4::new(h.clone());
                        let e = parse_all(&g, self.0)?;
                        reality_mixed_h4(&g, &e[0], &e[1], &self.1)
                    }
                }
                Ok(RealityOutput::Verdict(with_base_group(inner, caps, V(self, *caps))??))
            }
            _ => {
                struct V<'a>(&'a Structure, Caps);
                impl GroupVisitor for V<'_> {
                    type Output = Result<RealityOutput>;
                    fn visit<G: AutGroup>(self, g: &G) -> Self::Output {
                        let e = parse_all(g, self.0)?;
                        Ok(match self.0 {
                            Structure::Unmixed { .. } => RealityOutput::Verdict(reality_unmixed(
                                g,
                                &[e[0].clone(), e[1].clone(), e[2].clone(), e[3].clone()],
                                &self.1,
                            )?),
                            Structure::Mixed { .. } => {
                                RealityOutput::Verdict(reality_mixed_exhaustive(g, &e[0], &e[1], &e[2], &self.1)?)
                            }
                            Structure::Pair { .. } => RealityOutput::Cases {
                                cases: lemma_rea_cases(g, &(e[0].clone(), e[1].clone()), &self.1)?,
                            },
                        })
                    }
                }
                with_group(self.group(), caps, V(self, *caps))?
            }
        }
    }
}

fn parse_all<G: AutGroup>(g: &G, s: &Structure) -> Result<Vec<G::Elem>> {
    s.literals().iter().map(|x| g.parse_elem(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::beauville::Verdict;

    #[test]
    fn round_trip_and_check() {
        let text = r#"{"kind":"unmixed","group":{"kind":"ab2","n":5},"a1":"(1,0)","c1":"(0,1)","a2":"(1,2)","c2":"(3,4)"}"#;
        let s = Structure::from_json(text).unwrap();
        assert_eq!(Structure::from_json(&s.to_json()).unwrap(), s);
        let caps = Caps::default();
        let r = s.check(&caps).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        let same = r#"{"kind":"unmixed","group":"ab2:5","a1":"(1,0)","c1":"(0,1)","a2":"(1,0)","c2":"(0,1)"}"#;
        let r = Structure::from_json(same).unwrap().check(&caps).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        assert!(r.witness.is_some());
    }

    #[test]
    fn pair_has_no_check_but_has_cases() {
        let s = Structure::from_json(r#"{"kind":"pair","group":"ab2:5","a":"(1,0)","c":"(0,1)"}"#).unwrap();
        assert!(s.check(&Caps::default()).is_err());
        match s.reality(&Caps::default()).unwrap() {
            RealityOutput::Cases { cases } => assert_eq!(cases[0].solvable, Some(true)),
            other => panic!("{other:?}"),
        }
    }
}
