//! Contragredient families and their parameters.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    SL,
    B,
    C,
    D,
    D21A,
    F4,
    G3,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::SL,
        Family::B,
        Family::C,
        Family::D,
        Family::D21A,
        Family::F4,
        Family::G3,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::SL => "SL",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::D21A => "D21A",
            Family::F4 => "F4",
            Family::G3 => "G3",
        }
    }

    /// Names of the parameters the family takes, in canonical order.
    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            Family::SL | Family::B | Family::D => &["m", "n"],
            Family::C => &["n"],
            Family::D21A => &["alpha"],
            Family::F4 | Family::G3 => &[],
        }
    }

    pub fn default_parity_rule(self) -> Parity {
        match self {
            Family::SL => Parity::Even,
            _ => Parity::Odd,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let family = match s.to_ascii_uppercase().as_str() {
            "SL" | "A" => Family::SL,
            "B" => Family::B,
            "C" => Family::C,
            "D" => Family::D,
            "D21A" | "D21" => Family::D21A,
            "F4" | "F" => Family::F4,
            "G3" | "G" => Family::G3,
            _ => return Err(Error::InvalidParams(format!("unknown family {s:?}"))),
        };
        Ok(family)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(value: i64) -> Parity {
        if value.rem_euclid(2) == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

impl FromStr for Parity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "even" => Ok(Parity::Even),
            "odd" => Ok(Parity::Odd),
            _ => Err(Error::InvalidParams(format!("unknown parity {s:?}"))),
        }
    }
}

/// A family together with its rank parameters and the parity the a-label sum
/// of an admissible circling must have.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub family: Family,
    pub m: u32,
    pub n: u32,
    /// Specialization of the formal parameter of `D(2,1;alpha)`. Unused by the
    /// other families.
    pub alpha: Rational,
    pub parity_rule: Parity,
}

impl FamilySpec {
    fn raw(family: Family, m: u32, n: u32) -> Self {
        FamilySpec {
            family,
            m,
            n,
            alpha: Rational::zero(),
            parity_rule: family.default_parity_rule(),
        }
    }

    /// `A(m,n)`, i.e. `sl(m+1|n+1)`: a cycle of `m + n + 2` vertices whose
    /// white part is `A_m + A_n`.
    pub fn sl(m: u32, n: u32) -> Result<Self> {
        Self::raw(Family::SL, m, n).validated()
    }

    /// `B(m,n) = osp(2m+1|2n)`.
    pub fn b(m: u32, n: u32) -> Result<Self> {
        Self::raw(Family::B, m, n).validated()
    }

    /// `C(n) = osp(2|2n-2)`.
    pub fn c(n: u32) -> Result<Self> {
        Self::raw(Family::C, 0, n).validated()
    }

    /// `D(m,n) = osp(2m|2n)`.
    pub fn d(m: u32, n: u32) -> Result<Self> {
        Self::raw(Family::D, m, n).validated()
    }

    pub fn d21a(alpha: Rational) -> Result<Self> {
        FamilySpec {
            alpha,
            ..Self::raw(Family::D21A, 0, 0)
        }
        .validated()
    }

    pub fn f4() -> Self {
        Self::raw(Family::F4, 0, 0)
    }

    pub fn g3() -> Self {
        Self::raw(Family::G3, 0, 0)
    }

    /// Builds a spec from loosely typed inputs (command line, query strings).
    /// Missing parameters are an error, except `alpha` which defaults to 2.
    pub fn from_parts(
        family: Family,
        m: Option<u32>,
        n: Option<u32>,
        alpha: Option<Rational>,
    ) -> Result<Self> {
        let need = |v: Option<u32>, name: &str| {
            v.ok_or_else(|| Error::InvalidParams(format!("{family} requires parameter {name}")))
        };
        match family {
            Family::SL => Self::sl(need(m, "m")?, need(n, "n")?),
            Family::B => Self::b(need(m, "m")?, need(n, "n")?),
            Family::C => Self::c(need(n, "n")?),
            Family::D => Self::d(need(m, "m")?, need(n, "n")?),
            Family::D21A => Self::d21a(alpha.unwrap_or_else(|| Rational::from_integer(2))),
            Family::F4 => Ok(Self::f4()),
            Family::G3 => Ok(Self::g3()),
        }
    }

    pub fn with_parity_rule(mut self, rule: Parity) -> Self {
        self.parity_rule = rule;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let (m, n) = (self.m, self.n);
        let bad = |why: String| Err(Error::InvalidParams(why));
        match self.family {
            Family::SL => {
                if m < 2 || n < 1 {
                    return bad(format!("SL(m,n) requires m >= 2 and n >= 1, got ({m},{n})"));
                }
                if m == n {
                    return bad(format!("SL(n,n) is excluded from the catalog, got ({m},{n})"));
                }
            }
            Family::B => {
                if n < 1 {
                    return bad(format!("B(m,n) requires m >= 0 and n >= 1, got ({m},{n})"));
                }
            }
            Family::C => {
                if n < 2 {
                    return bad(format!("C(n) requires n >= 2, got {n}"));
                }
            }
            Family::D => {
                if m < 2 || n < 1 {
                    return bad(format!("D(m,n) requires m >= 2 and n >= 1, got ({m},{n})"));
                }
            }
            Family::D21A => {
                if self.alpha.is_zero() || self.alpha == -Rational::one() {
                    return bad(format!("D(2,1;alpha) requires alpha not in {{0,-1}}, got {}", self.alpha));
                }
            }
            Family::F4 | Family::G3 => {}
        }
        Ok(())
    }

    fn validated(self) -> Result<Self> {
        self.validate()?;
        Ok(self)
    }

    /// Parameters as they appear in the canonical diagram JSON.
    pub fn params_json(&self) -> BTreeMap<String, Value> {
        let mut params = BTreeMap::new();
        for &name in self.family.param_names() {
            let value = match name {
                "m" => Value::from(self.m),
                "n" => Value::from(self.n),
                _ => Value::from(self.alpha.to_string()),
            };
            params.insert(name.to_string(), value);
        }
        params
    }

    pub fn from_params_json(family: Family, params: &BTreeMap<String, Value>) -> Result<Self> {
        let int = |key: &str| -> Result<Option<u32>> {
            match params.get(key) {
                None => Ok(None),
                Some(v) => v
                    .as_u64()
                    .and_then(|x| u32::try_from(x).ok())
                    .map(Some)
                    .ok_or_else(|| Error::InvalidParams(format!("parameter {key} must be a non-negative integer"))),
            }
        };
        let alpha = match params.get("alpha") {
            None => None,
            Some(Value::String(s)) => Some(parse_rational(s)?),
            Some(Value::Number(x)) => Some(parse_rational(&x.to_string())?),
            Some(_) => return Err(Error::InvalidParams("parameter alpha must be a rational".into())),
        };
        Self::from_parts(family, int("m")?, int("n")?, alpha)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::SL => write!(f, "SL({},{})", self.m, self.n),
            Family::B => write!(f, "B({},{})", self.m, self.n),
            Family::C => write!(f, "C({})", self.n),
            Family::D => write!(f, "D({},{})", self.m, self.n),
            Family::D21A => write!(f, "D(2,1;{})", self.alpha),
            Family::F4 => f.write_str("F(4)"),
            Family::G3 => f.write_str("G(3)"),
        }
    }
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let err = || Error::InvalidParams(format!("not a rational number: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim().parse::<i64>().map_err(|_| err())?, q.trim().parse::<i64>().map_err(|_| err())?),
        None => (s.parse::<i64>().map_err(|_| err())?, 1),
    };
    if den == 0 {
        return Err(err());
    }
    Ok(Rational::new(num, den))
}

/// Entry of [`list_families`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyTemplate {
    pub family: Family,
    pub name: &'static str,
    pub params: &'static [&'static str],
    pub constraints: &'static str,
    pub parity_rule: Parity,
}

pub fn list_families() -> Vec<FamilyTemplate> {
    Family::ALL
        .iter()
        .map(|&family| {
            let (name, constraints) = match family {
                Family::SL => ("sl(m+1|n+1) = A(m,n)", "m>=2, n>=1, m!=n"),
                Family::B => ("osp(2m+1|2n) = B(m,n)", "m>=0, n>=1"),
                Family::C => ("osp(2|2n-2) = C(n)", "n>=2"),
                Family::D => ("osp(2m|2n) = D(m,n)", "m>=2, n>=1"),
                Family::D21A => ("D(2,1;alpha)", "alpha rational, alpha not in {0,-1}; default 2"),
                Family::F4 => ("F(4)", "none"),
                Family::G3 => ("G(3)", "none"),
            };
            FamilyTemplate {
                family,
                name,
                params: family.param_names(),
                constraints,
                parity_rule: family.default_parity_rule(),
            }
        })
        .collect()
}
