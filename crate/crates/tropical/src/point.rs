use std::collections::BTreeMap;

use num_traits::Zero;
use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};
use sl3_rational::{fmt_q, Q};
use sl3_seed::{ExchangeMatrix, IndexSet};

use crate::TropicalError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Kind {
    X,
    A,
}

/// A coordinate vector over `I(Δ)` in index-set order.
///
/// A restricted point only carries unfrozen coordinates; its frozen slots
/// hold zero and are neither read nor written.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropicalPoint {
    pub kind: Kind,
    pub restricted: bool,
    pub ids: Vec<String>,
    pub frozen: Vec<bool>,
    pub coords: Vec<Q>,
}

impl TropicalPoint {
    pub fn zero(kind: Kind, ix: &IndexSet) -> Self {
        TropicalPoint {
            kind,
            restricted: false,
            ids: ix.ids.clone(),
            frozen: ix.frozen.clone(),
            coords: vec![Q::zero(); ix.len()],
        }
    }

    pub fn from_vec(kind: Kind, ix: &IndexSet, coords: Vec<Q>) -> Self {
        assert_eq!(coords.len(), ix.len(), "coordinate count");
        TropicalPoint {
            coords,
            ..Self::zero(kind, ix)
        }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn position(&self, id: &str) -> Option<usize> {
        self.ids.iter().position(|x| x == id)
    }

    pub fn get(&self, id: &str) -> Option<&Q> {
        self.position(id).map(|i| &self.coords[i])
    }

    /// Panics on an unknown id.
    pub fn set(&mut self, id: &str, v: Q) {
        let i = self.position(id).unwrap_or_else(|| panic!("unknown index {id}"));
        self.coords[i] = v;
    }

    /// Drop the frozen coordinates.
    pub fn restrict(&self) -> Self {
        let mut p = self.clone();
        p.restricted = true;
        for (c, f) in p.coords.iter_mut().zip(&p.frozen) {
            if *f {
                *c = Q::zero();
            }
        }
        p
    }

    pub fn scale(&self, u: &Q) -> Self {
        let mut p = self.clone();
        for c in &mut p.coords {
            *c = &*c * u;
        }
        p
    }

    pub fn negate(&self) -> Self {
        self.scale(&-Q::from_integer(1.into()))
    }

    /// Whether position `i` carries a coordinate.
    pub fn live(&self, i: usize) -> bool {
        !(self.restricted && self.frozen[i])
    }

    pub fn check_seed_ids(&self, ids: &[String]) -> Result<(), TropicalError> {
        if self.ids != ids {
            return Err(TropicalError::SeedMismatch(format!(
                "point has {} indices, seed has {}",
                self.ids.len(),
                ids.len()
            )));
        }
        Ok(())
    }

    pub fn check_seed(&self, eps: &ExchangeMatrix) -> Result<(), TropicalError> {
        self.check_seed_ids(&eps.ids)
    }

    pub fn to_doc(&self) -> TropicalPointDoc {
        TropicalPointDoc {
            kind: self.kind,
            restricted: self.restricted,
            coords: (0..self.len())
                .filter(|&i| self.live(i))
                .map(|i| (self.ids[i].clone(), self.coords[i].clone()))
                .collect(),
        }
    }

    /// Missing coordinates read as zero; a restricted document may not name
    /// frozen indices.
    pub fn from_doc(doc: &TropicalPointDoc, ix: &IndexSet) -> Result<Self, TropicalError> {
        let mut p = Self::zero(doc.kind, ix);
        p.restricted = doc.restricted;
        for (id, v) in &doc.coords {
            let i = p
                .position(id)
                .ok_or_else(|| TropicalError::SeedMismatch(format!("unknown index {id}")))?;
            if !p.live(i) {
                return Err(TropicalError::SeedMismatch(format!("restricted point names frozen index {id}")));
            }
            p.coords[i] = v.clone();
        }
        Ok(p)
    }
}

/// Coordinates are written in index order.
impl Serialize for TropicalPoint {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            kind: Kind,
            restricted: bool,
            coords: Coords<'a>,
        }
        struct Coords<'a>(&'a TropicalPoint);
        impl Serialize for Coords<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                let p = self.0;
                let mut m = s.serialize_map(None)?;
                for i in (0..p.len()).filter(|&i| p.live(i)) {
                    m.serialize_entry(&p.ids[i], &fmt_q(&p.coords[i]))?;
                }
                m.end()
            }
        }
        Wire {
            kind: self.kind,
            restricted: self.restricted,
            coords: Coords(self),
        }
        .serialize(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TropicalPointDoc {
    pub kind: Kind,
    #[serde(default)]
    pub restricted: bool,
    #[serde(with = "coord_map")]
    pub coords: BTreeMap<String, Q>,
}

mod coord_map {
    use super::*;
    use serde::Deserializer;
    use sl3_rational::parse_q;

    pub fn serialize<S: Serializer>(m: &BTreeMap<String, Q>, s: S) -> Result<S::Ok, S::Error> {
        let mut out = s.serialize_map(Some(m.len()))?;
        for (k, v) in m {
            out.serialize_entry(k, &fmt_q(v))?;
        }
        out.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<String, Q>, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Str(String),
            Int(i64),
        }
        let raw = BTreeMap::<String, Raw>::deserialize(d)?;
        raw.into_iter()
            .map(|(k, v)| {
                let q = match v {
                    Raw::Str(s) => parse_q(&s).map_err(serde::de::Error::custom)?,
                    Raw::Int(n) => Q::from_integer(n.into()),
                };
                Ok((k, q))
            })
            .collect()
    }
}
