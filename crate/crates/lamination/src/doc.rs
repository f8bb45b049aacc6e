//! Wire forms of pictures and pinned laminations.

use std::fmt;
use std::marker::PhantomData;

use num_traits::{One, Zero};
use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use sl3_rational::Q;
use sl3_surface::{parse_side_ref, Triangulation};

use crate::picture::*;
use crate::{LaminationError, PinnedLamination};

/// A JSON object kept in insertion order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedMap<V>(pub Vec<(String, V)>);

impl<V> Default for OrderedMap<V> {
    fn default() -> Self {
        OrderedMap(Vec::new())
    }
}

impl<V: Serialize> Serialize for OrderedMap<V> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            m.serialize_entry(k, v)?;
        }
        m.end()
    }
}

impl<'de, V: Deserialize<'de>> Deserialize<'de> for OrderedMap<V> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V2<V>(PhantomData<V>);
        impl<'de, V: Deserialize<'de>> Visitor<'de> for V2<V> {
            type Value = OrderedMap<V>;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an object")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut a: A) -> Result<Self::Value, A::Error> {
                let mut out = Vec::new();
                while let Some((k, v)) = a.next_entry::<String, V>()? {
                    out.push((k, v));
                }
                Ok(OrderedMap(out))
            }
        }
        d.deserialize_map(V2(PhantomData))
    }
}

fn one() -> Q {
    Q::one()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcDoc {
    pub orient: Orient,
    #[serde(with = "sl3_rational::wire", default = "one")]
    pub weight: Q,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HoneycombDoc {
    pub orient: HoneycombOrient,
    pub height: u32,
    #[serde(with = "sl3_rational::wire", default = "one")]
    pub weight: Q,
    /// Derived routing summary; ignored on input.
    #[serde(default, skip_serializing_if = "Option::is_none", skip_deserializing)]
    pub legs: Option<OrderedMap<[usize; 3]>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct TrianglePictureDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub honeycomb: Option<HoneycombDoc>,
    #[serde(default)]
    pub corners: OrderedMap<Vec<ArcDoc>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PunctureSignDoc {
    pub edge: String,
    pub triangle: String,
    pub strand: usize,
    pub sign: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct GlobalPictureDoc {
    #[serde(default)]
    pub triangles: OrderedMap<TrianglePictureDoc>,
    #[serde(default)]
    pub pairings: OrderedMap<Vec<[usize; 2]>>,
    #[serde(default)]
    pub puncture_signs: Vec<PunctureSignDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PinnedLaminationDoc {
    #[serde(flatten)]
    pub picture: GlobalPictureDoc,
    #[serde(default)]
    pub delta: OrderedMap<Pair>,
}

/// A `[δ⁺, δ⁻]` pair on the wire.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pair(#[serde(with = "sl3_rational::wire_pair")] pub [Q; 2]);

fn unknown(what: &str, id: &str) -> LaminationError {
    LaminationError::UnknownId(format!("{what} {id}"))
}

impl GlobalPicture {
    pub fn to_doc(&self, t: &Triangulation) -> GlobalPictureDoc {
        let mut triangles = Vec::new();
        for (ti, tp) in self.triangles.iter().enumerate() {
            if tp.honeycomb.is_none() && tp.corners.iter().all(|c| c.is_empty()) {
                continue;
            }
            let routing = self.leg_routing(t, ti);
            let honeycomb = tp.honeycomb.as_ref().map(|h| HoneycombDoc {
                orient: h.orient,
                height: h.height,
                weight: h.weight.clone(),
                legs: Some(OrderedMap(
                    (0..3)
                        .filter_map(|s| routing[s].map(|n| (s.to_string(), n)))
                        .collect(),
                )),
            });
            let corners = (0..3)
                .filter(|&c| !tp.corners[c].is_empty())
                .map(|c| {
                    let arcs = tp.corners[c]
                        .iter()
                        .map(|a| ArcDoc {
                            orient: a.orient,
                            weight: a.weight.clone(),
                        })
                        .collect();
                    (c.to_string(), arcs)
                })
                .collect();
            triangles.push((
                t.triangles[ti].id.clone(),
                TrianglePictureDoc {
                    honeycomb,
                    corners: OrderedMap(corners),
                },
            ));
        }
        let pairings = (0..t.num_edges())
            .filter(|&e| !self.pairings[e].is_empty())
            .map(|e| (t.edges[e].id.clone(), self.pairings[e].iter().map(|&(a, b)| [a, b]).collect()))
            .collect();
        let puncture_signs = self
            .puncture_signs
            .iter()
            .map(|p| PunctureSignDoc {
                edge: t.edges[t.triangles[p.tri].sides[p.side].edge].id.clone(),
                triangle: t.triangles[p.tri].id.clone(),
                strand: p.strand,
                sign: if p.sign > 0 { "+" } else { "-" }.to_string(),
            })
            .collect();
        GlobalPictureDoc {
            triangles: OrderedMap(triangles),
            pairings: OrderedMap(pairings),
            puncture_signs,
        }
    }

    /// Parse and validate.
    pub fn from_doc(doc: &GlobalPictureDoc, t: &Triangulation) -> Result<Self, LaminationError> {
        let mut p = GlobalPicture::empty(t);
        for (id, td) in &doc.triangles.0 {
            let ti = t.triangle_index(id).ok_or_else(|| unknown("triangle", id))?;
            let tp = &mut p.triangles[ti];
            tp.honeycomb = td.honeycomb.as_ref().filter(|h| h.height > 0).map(|h| Honeycomb {
                orient: h.orient,
                height: h.height,
                weight: h.weight.clone(),
            });
            for (c, arcs) in &td.corners.0 {
                let c: usize = c
                    .parse()
                    .ok()
                    .filter(|c| *c < 3)
                    .ok_or_else(|| unknown("corner", c))?;
                tp.corners[c] = arcs
                    .iter()
                    .map(|a| CornerArc {
                        orient: a.orient,
                        weight: a.weight.clone(),
                    })
                    .collect();
            }
        }
        for (id, pairs) in &doc.pairings.0 {
            let e = t.edge_index(parse_side_ref(id).0).ok_or_else(|| unknown("edge", id))?;
            let mut v: Vec<(usize, usize)> = pairs.iter().map(|p| (p[0], p[1])).collect();
            v.sort_unstable();
            p.pairings[e] = v;
        }
        for ps in &doc.puncture_signs {
            let e = t.edge_index(&ps.edge).ok_or_else(|| unknown("edge", &ps.edge))?;
            let tri = t.triangle_index(&ps.triangle).ok_or_else(|| unknown("triangle", &ps.triangle))?;
            let side = t.triangles[tri]
                .sides
                .iter()
                .position(|s| s.edge == e)
                .ok_or_else(|| LaminationError::InvalidPicture(format!("{} is not a side of {}", ps.edge, ps.triangle)))?;
            let sign = match ps.sign.as_str() {
                "+" | "+1" | "1" => 1,
                "-" | "-1" => -1,
                s => return Err(LaminationError::InvalidPicture(format!("bad puncture sign {s:?}"))),
            };
            p.puncture_signs.push(PunctureSign {
                tri,
                side,
                strand: ps.strand,
                sign,
            });
        }
        p.puncture_signs.sort_unstable();
        p.validate(t)?;
        Ok(p)
    }
}

impl PinnedLamination {
    pub fn to_doc(&self, t: &Triangulation) -> PinnedLaminationDoc {
        let delta = (0..t.num_edges())
            .filter(|&e| !t.is_interior(e))
            .map(|e| (t.edges[e].id.clone(), Pair(self.delta[e].clone())))
            .collect();
        PinnedLaminationDoc {
            picture: self.picture.to_doc(t),
            delta: OrderedMap(delta),
        }
    }

    pub fn from_doc(doc: &PinnedLaminationDoc, t: &Triangulation) -> Result<Self, LaminationError> {
        let picture = GlobalPicture::from_doc(&doc.picture, t)?;
        let mut delta = vec![[Q::zero(), Q::zero()]; t.num_edges()];
        for (id, v) in &doc.delta.0 {
            let e = t.edge_index(id).ok_or_else(|| unknown("edge", id))?;
            if t.is_interior(e) {
                return Err(LaminationError::UnknownId(format!("{id} is not a boundary interval")));
            }
            delta[e] = v.0.clone();
        }
        Ok(PinnedLamination { picture, delta })
    }
}
