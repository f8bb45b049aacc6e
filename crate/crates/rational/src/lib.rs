//! Exact rationals as used across the workspace.
//!
//! Every coordinate is a `Q` (an arbitrary-precision rational). On the wire a
//! rational is a string: `"p/q"` in lowest terms, or `"p"` when integral.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serializer};

pub use num_rational::BigRational as Q;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("not an exact rational: {0:?}")]
pub struct ParseQError(pub String);

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn half() -> Q {
    frac(1, 2)
}

/// `[x]_+ = max(0, x)`.
pub fn pos(x: &Q) -> Q {
    if x.is_positive() {
        x.clone()
    } else {
        Q::zero()
    }
}

/// `[x, y, z]_+ = max(0, x, x+y, x+y+z)`.
pub fn pos3(x: &Q, y: &Q, z: &Q) -> Q {
    let a = x.clone();
    let b = &a + y;
    let c = &b + z;
    [a, b, c].into_iter().fold(Q::zero(), |m, v| if v > m { v } else { m })
}

pub fn max(a: Q, b: Q) -> Q {
    if a >= b {
        a
    } else {
        b
    }
}

/// Sign as -1, 0, 1.
pub fn sgn(x: &Q) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

pub fn parse_q(s: &str) -> Result<Q, ParseQError> {
    let t = s.trim();
    let err = || ParseQError(s.to_string());
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| err())?;
    let d: BigInt = d.parse().map_err(|_| err())?;
    if d.is_zero() {
        return Err(err());
    }
    Ok(Q::new(n, d))
}

pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Display adapter, so `format!("{}", Show(&x))` prints the wire form.
pub struct Show<'a>(pub &'a Q);

impl fmt::Display for Show<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_q(self.0))
    }
}

pub fn is_integral(x: &Q) -> bool {
    x.is_integer()
}

pub fn to_i64(x: &Q) -> Option<i64> {
    if !x.is_integer() {
        return None;
    }
    i64::try_from(x.numer()).ok()
}

/// Least common multiple of the denominators.
pub fn denom_lcm<'a>(xs: impl IntoIterator<Item = &'a Q>) -> BigInt {
    xs.into_iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

pub fn abs(x: &Q) -> Q {
    x.abs()
}

/// serde adapter: `#[serde(with = "sl3_rational::wire")]`.
pub mod wire {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Q, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_q(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
        let raw = WireQ::deserialize(d)?;
        raw.into_q().map_err(serde::de::Error::custom)
    }

    /// Accept `"p/q"` strings and bare integers.
    #[derive(Deserialize)]
    #[serde(untagged)]
    pub(crate) enum WireQ {
        Str(String),
        Int(i64),
    }

    impl WireQ {
        pub(crate) fn into_q(self) -> Result<Q, ParseQError> {
            match self {
                WireQ::Str(s) => parse_q(&s),
                WireQ::Int(n) => Ok(q(n)),
            }
        }
    }
}

/// Same as [`wire`] for `Option<Q>`.
pub mod wire_opt {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Option<Q>, s: S) -> Result<S::Ok, S::Error> {
        match x {
            Some(x) => s.serialize_str(&fmt_q(x)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Q>, D::Error> {
        let raw = Option::<wire::WireQ>::deserialize(d)?;
        raw.map(|r| r.into_q().map_err(serde::de::Error::custom))
            .transpose()
    }
}

/// Same as [`wire`] for a pair `[Q; 2]`.
pub mod wire_pair {
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(x: &[Q; 2], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(2))?;
        seq.serialize_element(&fmt_q(&x[0]))?;
        seq.serialize_element(&fmt_q(&x[1]))?;
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<[Q; 2], D::Error> {
        let raw = <[wire::WireQ; 2]>::deserialize(d)?;
        let [a, b] = raw;
        Ok([
            a.into_q().map_err(serde::de::Error::custom)?,
            b.into_q().map_err(serde::de::Error::custom)?,
        ])
    }
}
