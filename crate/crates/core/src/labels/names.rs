use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// `n_j`: the `j`-th character of degree `n` in Kondo's table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KondoLabel {
    pub degree: u32,
    pub index: u32,
}

impl KondoLabel {
    pub const fn new(degree: u32, index: u32) -> Self {
        Self { degree, index }
    }

    /// The `χ_{n,j}` spelling used in the twisted-E6 tables.
    pub fn alias(&self) -> String {
        format!("χ_{{{},{}}}", self.degree, self.index)
    }
}

impl fmt::Display for KondoLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.degree, self.index)
    }
}

impl FromStr for KondoLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad Kondo label {s:?}"));
        let (n, j) = s.trim().split_once('_').ok_or_else(bad)?;
        Ok(Self {
            degree: n.parse().map_err(|_| bad())?,
            index: j.parse().map_err(|_| bad())?,
        })
    }
}

impl Serialize for KondoLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Prime {
    None,
    Single,
    Double,
}

/// `φ_{d,b}` with an optional prime mark.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CarterLabel {
    pub degree: u32,
    pub b: u32,
    pub prime: Prime,
}

impl CarterLabel {
    pub const fn new(degree: u32, b: u32, prime: Prime) -> Self {
        Self { degree, b, prime }
    }

    fn marks(&self, single: &'static str, double: &'static str) -> &'static str {
        match self.prime {
            Prime::None => "",
            Prime::Single => single,
            Prime::Double => double,
        }
    }

    pub fn ascii(&self) -> String {
        format!(
            "phi_{{{},{}}}{}",
            self.degree,
            self.b,
            self.marks("'", "''")
        )
    }

    pub fn latex(&self) -> String {
        format!(
            "\\phi_{{{},{}}}{}",
            self.degree,
            self.b,
            self.marks("'", "''")
        )
    }
}

impl fmt::Display for CarterLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "φ_{{{},{}}}{}",
            self.degree,
            self.b,
            self.marks("′", "″")
        )
    }
}

impl FromStr for CarterLabel {
    type Err = Error;

    /// Accepts `φ_{2,4}″`, `phi_{2,4}''`, `\phi_{2,4}''` and `phi_2,4''`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad Carter label {s:?}"));
        let t = s.trim();
        let t = t.strip_prefix('\\').unwrap_or(t);
        let t = t
            .strip_prefix("phi")
            .or_else(|| t.strip_prefix('φ'))
            .ok_or_else(bad)?;
        let t = t.strip_prefix('_').ok_or_else(bad)?;
        let (body, rest) = match t.strip_prefix('{') {
            Some(inner) => inner.split_once('}').ok_or_else(bad)?,
            None => {
                let end = t
                    .find(|c: char| !(c.is_ascii_digit() || c == ','))
                    .unwrap_or(t.len());
                t.split_at(end)
            }
        };
        let (d, b) = body.split_once(',').ok_or_else(bad)?;
        let prime = match rest.trim() {
            "" => Prime::None,
            "'" | "′" => Prime::Single,
            "''" | "″" | "′′" => Prime::Double,
            _ => return Err(bad()),
        };
        Ok(Self {
            degree: d.trim().parse().map_err(|_| bad())?,
            b: b.trim().parse().map_err(|_| bad())?,
            prime,
        })
    }
}

impl Serialize for CarterLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
