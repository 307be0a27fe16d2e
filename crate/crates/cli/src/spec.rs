//! Product spec strings: `<monoid>|q=<elem>|<base>|<twisting>`, e.g.
//! `zeroinf|q=inf|P:2|canonical` or `zmod:2|q=1|Mat:2:3|rank`.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use twistkit_core::diagram::DiagramFamily;
use twistkit_core::monoid::{CommMonoid, TableMonoid};

use crate::error::CliError;

/// A finite base monoid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BaseSpec {
    Diagram(DiagramFamily, usize),
    /// All partial maps of `{1..n}`; they do not embed as diagrams.
    PartialMaps(usize),
    Matrices { n: usize, p: u32 },
    /// Equivalences under join.
    Eq(usize),
}

impl BaseSpec {
    /// Builds from `--family` / `--n` / `--p` flags.
    pub fn from_flags(family: &str, n: usize, p: Option<u32>) -> Result<Self, CliError> {
        match family {
            "Mat" | "mat" => Ok(BaseSpec::Matrices { n, p: p.unwrap_or(2) }),
            _ if p.is_some() => Err(CliError::Usage("--p only applies to the Mat family".into())),
            "PT" | "pt" => Ok(BaseSpec::PartialMaps(n)),
            "Eq" | "eq" => Ok(BaseSpec::Eq(n)),
            f => f
                .parse()
                .map(|f| BaseSpec::Diagram(f, n))
                .map_err(|_| CliError::Usage(format!("unknown family {f:?}"))),
        }
    }
}

impl FromStr for BaseSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let parts: Vec<&str> = s.split(':').collect();
        let num = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| CliError::Usage(format!("bad degree {t:?} in {s:?}")))
        };
        match parts.as_slice() {
            ["Mat" | "mat", n, p] => {
                let p = p
                    .parse()
                    .map_err(|_| CliError::Usage(format!("bad prime {p:?} in {s:?}")))?;
                Self::from_flags("Mat", num(n)?, Some(p))
            }
            [family, n] => Self::from_flags(family, num(n)?, None),
            _ => Err(CliError::Usage(format!("base must be <family>:<n> or Mat:<n>:<p>, got {s:?}"))),
        }
    }
}

impl fmt::Display for BaseSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseSpec::Diagram(family, n) => write!(f, "{family}:{n}"),
            BaseSpec::PartialMaps(n) => write!(f, "PT:{n}"),
            BaseSpec::Matrices { n, p } => write!(f, "Mat:{n}:{p}"),
            BaseSpec::Eq(n) => write!(f, "Eq:{n}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwistSpec {
    /// Floating components; diagram bases only.
    Canonical,
    /// `n - rank(a) - rank(b) + rank(ab)`.
    Rank,
    Trivial,
    Shift(u32, Box<TwistSpec>),
}

impl FromStr for TwistSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "canonical" => Ok(TwistSpec::Canonical),
            "rank" | "rank-based" => Ok(TwistSpec::Rank),
            "trivial" => Ok(TwistSpec::Trivial),
            _ => {
                let rest = s
                    .strip_prefix("shift:")
                    .ok_or_else(|| CliError::Usage(format!("unknown twisting {s:?}")))?;
                let (k, inner) = rest
                    .split_once(':')
                    .ok_or_else(|| CliError::Usage(format!("shift needs shift:<k>:<twisting>, got {s:?}")))?;
                let k = k
                    .parse()
                    .map_err(|_| CliError::Usage(format!("bad shift {k:?}")))?;
                Ok(TwistSpec::Shift(k, Box::new(inner.parse()?)))
            }
        }
    }
}

impl fmt::Display for TwistSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TwistSpec::Canonical => write!(f, "canonical"),
            TwistSpec::Rank => write!(f, "rank"),
            TwistSpec::Trivial => write!(f, "trivial"),
            TwistSpec::Shift(k, inner) => write!(f, "shift:{k}:{inner}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonoidSpec {
    Nat,
    Int,
    ZMod(u32),
    ZeroInf,
    EqJoin(usize),
    /// A JSON addition table read from a file.
    Table(PathBuf),
}

impl MonoidSpec {
    pub fn build(&self) -> Result<CommMonoid, CliError> {
        Ok(match self {
            MonoidSpec::Nat => CommMonoid::Nat,
            MonoidSpec::Int => CommMonoid::Int,
            MonoidSpec::ZMod(k) => CommMonoid::zmod(*k).map_err(|e| CliError::Usage(e.to_string()))?,
            MonoidSpec::ZeroInf => CommMonoid::ZeroInf,
            MonoidSpec::EqJoin(n) => CommMonoid::EqJoin(*n),
            MonoidSpec::Table(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
                CommMonoid::Table(TableMonoid::from_json(&text).map_err(|e| CliError::Usage(e.to_string()))?)
            }
        })
    }
}

impl FromStr for MonoidSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let bad = || CliError::Usage(format!("unknown monoid {s:?}"));
        let (kind, param) = match s.split_once(':') {
            Some((k, p)) => (k, Some(p)),
            None => (s, None),
        };
        Ok(match (kind.to_ascii_lowercase().as_str(), param) {
            ("nat" | "n", None) => MonoidSpec::Nat,
            ("int" | "z", None) => MonoidSpec::Int,
            ("zeroinf", None) => MonoidSpec::ZeroInf,
            ("zmod", Some(k)) => MonoidSpec::ZMod(k.parse().map_err(|_| bad())?),
            ("eqjoin", Some(n)) => MonoidSpec::EqJoin(n.parse().map_err(|_| bad())?),
            ("table", Some(path)) => MonoidSpec::Table(PathBuf::from(path)),
            _ => return Err(bad()),
        })
    }
}

impl fmt::Display for MonoidSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonoidSpec::Nat => write!(f, "nat"),
            MonoidSpec::Int => write!(f, "int"),
            MonoidSpec::ZMod(k) => write!(f, "zmod:{k}"),
            MonoidSpec::ZeroInf => write!(f, "zeroinf"),
            MonoidSpec::EqJoin(n) => write!(f, "eqjoin:{n}"),
            MonoidSpec::Table(p) => write!(f, "table:{}", p.display()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductSpec {
    pub monoid: MonoidSpec,
    pub q: String,
    pub base: BaseSpec,
    pub twisting: TwistSpec,
}

impl FromStr for ProductSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let parts: Vec<&str> = s.split('|').map(str::trim).collect();
        let [monoid, q, base, twisting] = parts.as_slice() else {
            return Err(CliError::Usage(format!(
                "spec must be <monoid>|q=<elem>|<family>:<n>|<twisting>, got {s:?}"
            )));
        };
        let q = q
            .strip_prefix("q=")
            .ok_or_else(|| CliError::Usage(format!("second spec field must be q=<elem>, got {q:?}")))?;
        Ok(ProductSpec {
            monoid: monoid.parse()?,
            q: q.to_string(),
            base: base.parse()?,
            twisting: twisting.parse()?,
        })
    }
}

impl fmt::Display for ProductSpec {
    /// The normalized spec; used as the cache key.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|q={}|{}|{}", self.monoid, self.q, self.base, self.twisting)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_normalizes() {
        let s: ProductSpec = "zeroinf|q=inf|P:2|canonical".parse().unwrap();
        assert_eq!(s.base, BaseSpec::Diagram(DiagramFamily::P, 2));
        assert_eq!(s.to_string(), "zeroinf|q=inf|P:2|canonical");
        let s: ProductSpec = "ZMod:3 | q=1 | Mat:2:3 | shift:1:rank".parse().unwrap();
        assert_eq!(s.to_string(), "zmod:3|q=1|Mat:2:3|shift:1:rank");
        assert_eq!(s.twisting, TwistSpec::Shift(1, Box::new(TwistSpec::Rank)));
        assert_eq!("M:3".parse::<BaseSpec>().unwrap(), BaseSpec::Diagram(DiagramFamily::Mz, 3));
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["zeroinf|P:2|canonical", "foo|q=0|P:2|rank", "nat|q=0|Q:2|rank", "nat|q=0|P:2|twisty", "nat|0|P:2|rank"] {
            assert!(matches!(bad.parse::<ProductSpec>(), Err(CliError::Usage(_))), "{bad}");
        }
    }
}
