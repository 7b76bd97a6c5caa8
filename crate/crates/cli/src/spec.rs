//! Group spec grammar for the command line.
//!
//! ```text
//! spec := "cyclic:" n | "dihedral:" n | "sym:" n | "alt:" n | "q8"
//!       | "ea:" p "^" k | "prod:(" spec "," spec ")"
//!       | "cayley:" path | "perm:" path | "psl2:" q
//! ```

use std::path::PathBuf;

use hallpaige_core::family::{self, Family};
use hallpaige_core::{io, psl2, Group};

#[derive(Clone, Debug)]
pub enum GroupSpec {
    Family(Family),
    Cayley(PathBuf),
    Perm(PathBuf),
    Psl2(usize),
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<GroupSpec, String> {
        let text = text.trim();
        if text == "q8" {
            return Ok(GroupSpec::Family(Family::Quaternion8));
        }
        let (head, rest) = text
            .split_once(':')
            .ok_or_else(|| format!("cannot parse group spec {text:?}"))?;
        let int = |s: &str| -> Result<usize, String> {
            s.trim()
                .parse()
                .map_err(|_| format!("expected an integer in {text:?}"))
        };
        match head {
            "cyclic" => Ok(GroupSpec::Family(Family::Cyclic(int(rest)?))),
            "dihedral" => Ok(GroupSpec::Family(Family::Dihedral(int(rest)?))),
            "sym" => Ok(GroupSpec::Family(Family::Symmetric(int(rest)?))),
            "alt" => Ok(GroupSpec::Family(Family::Alternating(int(rest)?))),
            "ea" => {
                let (p, k) = rest
                    .split_once('^')
                    .ok_or_else(|| format!("expected p^k in {text:?}"))?;
                Ok(GroupSpec::Family(Family::ElementaryAbelian {
                    p: int(p)?,
                    k: int(k)? as u32,
                }))
            }
            "prod" => {
                let inner = rest
                    .strip_prefix('(')
                    .and_then(|s| s.strip_suffix(')'))
                    .ok_or_else(|| format!("expected prod:(a,b) in {text:?}"))?;
                let comma = top_level_comma(inner)
                    .ok_or_else(|| format!("expected two specs in {text:?}"))?;
                let a = GroupSpec::parse(&inner[..comma])?;
                let b = GroupSpec::parse(&inner[comma + 1..])?;
                match (a, b) {
                    (GroupSpec::Family(fa), GroupSpec::Family(fb)) => Ok(GroupSpec::Family(
                        Family::Product(Box::new(fa), Box::new(fb)),
                    )),
                    _ => Err("prod factors must be builtin families".into()),
                }
            }
            "cayley" => Ok(GroupSpec::Cayley(PathBuf::from(rest))),
            "perm" => Ok(GroupSpec::Perm(PathBuf::from(rest))),
            "psl2" => Ok(GroupSpec::Psl2(int(rest)?)),
            _ => Err(format!("unknown group family {head:?}")),
        }
    }

    pub fn load(&self) -> Result<Group, String> {
        match self {
            GroupSpec::Family(f) => family::builtin(f).map_err(|e| e.to_string()),
            GroupSpec::Cayley(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| format!("{}: {e}", path.display()))?;
                io::read_cayley_table(&text).map_err(|e| e.to_string())
            }
            GroupSpec::Perm(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| format!("{}: {e}", path.display()))?;
                io::read_permutation_group(&text).map_err(|e| e.to_string())
            }
            GroupSpec::Psl2(q) => Ok(psl2(*q)
                .map_err(|e| e.to_string())?
                .group()
                .clone()
                .with_label(format!("psl2:{q}"))),
        }
    }
}

fn top_level_comma(s: &str) -> Option<usize> {
    let mut depth = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => return Some(i),
            _ => {}
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_roundtrip() {
        let g = GroupSpec::parse("prod:(cyclic:2,cyclic:2)").unwrap().load().unwrap();
        assert_eq!(g.order(), 4);
        let g = GroupSpec::parse("ea:3^2").unwrap().load().unwrap();
        assert_eq!(g.order(), 9);
        assert!(GroupSpec::parse("nope:3").is_err());
        let nested = GroupSpec::parse("prod:(prod:(cyclic:2,cyclic:3),dihedral:4)").unwrap();
        assert_eq!(nested.load().unwrap().order(), 48);
    }
}
