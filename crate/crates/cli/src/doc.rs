//! The diagram file format: a JSON document declaring groups, maps, and a
//! diagram binding, plus resolution into core objects and serialization of
//! generated diagrams back into the same form.

use chase_core::four::FourDiagram;
use chase_core::snake::SnakeDiagram;
use chase_core::{FpAbGroup, Hom, IntMatrix};
use num_bigint::BigInt;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

/// Arbitrary-precision integer that reads from a JSON number or a decimal
/// string and writes a number whenever the value fits in 64 bits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match i64::try_from(&self.0) {
            Ok(v) => s.serialize_i64(v),
            Err(_) => s.serialize_str(&self.0.to_string()),
        }
    }
}

struct JsonIntVisitor;

impl Visitor<'_> for JsonIntVisitor {
    type Value = JsonInt;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an integer or a decimal integer string")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<JsonInt, E> {
        Ok(JsonInt(BigInt::from(v)))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<JsonInt, E> {
        Ok(JsonInt(BigInt::from(v)))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<JsonInt, E> {
        v.parse::<BigInt>()
            .map(JsonInt)
            .map_err(|_| E::custom(format!("not a decimal integer: {v:?}")))
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<JsonInt, D::Error> {
        d.deserialize_any(JsonIntVisitor)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDecl {
    pub gens: usize,
    /// Relation columns, each of length `gens`.
    pub relations: Vec<Vec<JsonInt>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDecl {
    pub from: String,
    pub to: String,
    /// Row-major, `to.gens` rows of `from.gens` entries.
    pub matrix: Vec<Vec<JsonInt>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum DiagramBinding {
    #[serde(rename = "snake")]
    Snake {
        f: String,
        g: String,
        f1: String,
        g1: String,
        alpha: String,
        beta: String,
        gamma: String,
    },
    #[serde(rename = "ring")]
    Ring { alpha: String, beta: String },
    #[serde(rename = "four")]
    Four {
        f: String,
        g: String,
        h: String,
        f1: String,
        g1: String,
        h1: String,
        alpha: String,
        beta: String,
        gamma: String,
        delta: String,
    },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramDoc {
    pub groups: BTreeMap<String, GroupDecl>,
    pub maps: BTreeMap<String, MapDecl>,
    pub diagram: DiagramBinding,
}

/// A diagram ready to run, with the roles bound.
#[derive(Debug)]
pub enum ResolvedDiagram {
    Snake(Box<SnakeDiagram>),
    Ring { alpha: Box<Hom>, beta: Box<Hom> },
    Four(Box<FourDiagram>),
}

fn big_cols(cols: &[Vec<JsonInt>]) -> Vec<Vec<BigInt>> {
    cols.iter()
        .map(|c| c.iter().map(|x| x.0.clone()).collect())
        .collect()
}

fn big_matrix(rows: &[Vec<JsonInt>], want_rows: usize, want_cols: usize) -> Option<IntMatrix> {
    if rows.len() != want_rows || rows.iter().any(|r| r.len() != want_cols) {
        return None;
    }
    Some(IntMatrix::from_fn(want_rows, want_cols, |i, j| {
        rows[i][j].0.clone()
    }))
}

impl DiagramDoc {
    pub fn resolve(&self) -> Result<ResolvedDiagram, String> {
        let mut groups: BTreeMap<&str, FpAbGroup> = BTreeMap::new();
        for (name, decl) in &self.groups {
            if let Some(bad) = decl.relations.iter().position(|c| c.len() != decl.gens) {
                return Err(format!(
                    "group {name:?}: relation column {bad} has length {} but the group has {} generators",
                    decl.relations[bad].len(),
                    decl.gens
                ));
            }
            let g = FpAbGroup::from_relation_columns(decl.gens, &big_cols(&decl.relations))
                .map_err(|e| format!("group {name:?}: {e}"))?;
            groups.insert(name, g);
        }
        let mut homs: BTreeMap<&str, Hom> = BTreeMap::new();
        for (name, decl) in &self.maps {
            let from = groups
                .get(decl.from.as_str())
                .ok_or_else(|| format!("map {name:?}: unknown source group {:?}", decl.from))?;
            let to = groups
                .get(decl.to.as_str())
                .ok_or_else(|| format!("map {name:?}: unknown target group {:?}", decl.to))?;
            let matrix = big_matrix(&decl.matrix, to.n_gens(), from.n_gens()).ok_or_else(|| {
                format!(
                    "map {name:?}: matrix must have {} rows of {} entries",
                    to.n_gens(),
                    from.n_gens()
                )
            })?;
            let h = Hom::new(from.clone(), to.clone(), matrix)
                .map_err(|e| format!("map {name:?}: {e}"))?;
            homs.insert(name, h);
        }
        let hom = |role: &str, name: &str| -> Result<Hom, String> {
            homs.get(name)
                .cloned()
                .ok_or_else(|| format!("diagram role {role:?} refers to unknown map {name:?}"))
        };
        let wire = |role: &str, h: &Hom, src: &Hom, tgt_is_source: bool| -> Result<(), String> {
            let expected = if tgt_is_source { src.source() } else { src.target() };
            if h.source() != expected {
                return Err(format!("diagram wiring: map {role:?} starts at the wrong group"));
            }
            Ok(())
        };
        match &self.diagram {
            DiagramBinding::Snake {
                f,
                g,
                f1,
                g1,
                alpha,
                beta,
                gamma,
            } => {
                let f = hom("f", f)?;
                let g = hom("g", g)?;
                let f1 = hom("f1", f1)?;
                let g1 = hom("g1", g1)?;
                let alpha = hom("alpha", alpha)?;
                let beta = hom("beta", beta)?;
                let gamma = hom("gamma", gamma)?;
                wire("g", &g, &f, false)?;
                wire("g1", &g1, &f1, false)?;
                wire("alpha", &alpha, &f, true)?;
                wire("beta", &beta, &g, true)?;
                if gamma.source() != g.target() {
                    return Err("diagram wiring: map \"gamma\" starts at the wrong group".into());
                }
                if alpha.target() != f1.source()
                    || beta.target() != g1.source()
                    || gamma.target() != g1.target()
                {
                    return Err("diagram wiring: a vertical map ends at the wrong group".into());
                }
                Ok(ResolvedDiagram::Snake(Box::new(SnakeDiagram {
                    a: f.source().clone(),
                    b: f.target().clone(),
                    c: g.target().clone(),
                    a1: f1.source().clone(),
                    b1: f1.target().clone(),
                    c1: g1.target().clone(),
                    f,
                    g,
                    f1,
                    g1,
                    alpha,
                    beta,
                    gamma,
                })))
            }
            DiagramBinding::Ring { alpha, beta } => {
                let alpha = hom("alpha", alpha)?;
                let beta = hom("beta", beta)?;
                if alpha.target() != beta.source() {
                    return Err("diagram wiring: \"beta\" must start where \"alpha\" ends".into());
                }
                Ok(ResolvedDiagram::Ring {
                    alpha: Box::new(alpha),
                    beta: Box::new(beta),
                })
            }
            DiagramBinding::Four {
                f,
                g,
                h,
                f1,
                g1,
                h1,
                alpha,
                beta,
                gamma,
                delta,
            } => {
                let f = hom("f", f)?;
                let g = hom("g", g)?;
                let h = hom("h", h)?;
                let f1 = hom("f1", f1)?;
                let g1 = hom("g1", g1)?;
                let h1 = hom("h1", h1)?;
                let alpha = hom("alpha", alpha)?;
                let beta = hom("beta", beta)?;
                let gamma = hom("gamma", gamma)?;
                let delta = hom("delta", delta)?;
                for (role, mp, prev) in [("g", &g, &f), ("h", &h, &g), ("g1", &g1, &f1), ("h1", &h1, &g1)] {
                    wire(role, mp, prev, false)?;
                }
                let vertical_ok = alpha.source() == f.source()
                    && alpha.target() == f1.source()
                    && beta.source() == g.source()
                    && beta.target() == g1.source()
                    && gamma.source() == h.source()
                    && gamma.target() == h1.source()
                    && delta.source() == h.target()
                    && delta.target() == h1.target();
                if !vertical_ok {
                    return Err("diagram wiring: a vertical map has the wrong endpoints".into());
                }
                Ok(ResolvedDiagram::Four(Box::new(FourDiagram {
                    a: f.source().clone(),
                    b: f.target().clone(),
                    c: g.target().clone(),
                    d: h.target().clone(),
                    a1: f1.source().clone(),
                    b1: f1.target().clone(),
                    c1: g1.target().clone(),
                    d1: h1.target().clone(),
                    f,
                    g,
                    h,
                    f1,
                    g1,
                    h1,
                    alpha,
                    beta,
                    gamma,
                    delta,
                })))
            }
        }
    }
}

pub fn matrix_json(m: &IntMatrix) -> Vec<Vec<JsonInt>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| JsonInt(m.at(i, j).clone())).collect())
        .collect()
}

fn group_decl(g: &FpAbGroup) -> GroupDecl {
    GroupDecl {
        gens: g.n_gens(),
        relations: g
            .relations()
            .basis()
            .columns()
            .map(|c| c.into_iter().map(JsonInt).collect())
            .collect(),
    }
}

fn map_decl(h: &Hom, from: &str, to: &str) -> MapDecl {
    MapDecl {
        from: from.into(),
        to: to.into(),
        matrix: matrix_json(h.matrix()),
    }
}

/// Serializes a snake diagram back to file form with canonical lattices.
pub fn snake_to_doc(d: &SnakeDiagram) -> DiagramDoc {
    let mut groups = BTreeMap::new();
    for (name, g) in [
        ("a", &d.a),
        ("b", &d.b),
        ("c", &d.c),
        ("a1", &d.a1),
        ("b1", &d.b1),
        ("c1", &d.c1),
    ] {
        groups.insert(name.to_string(), group_decl(g));
    }
    let mut maps = BTreeMap::new();
    for (name, h, from, to) in [
        ("f", &d.f, "a", "b"),
        ("g", &d.g, "b", "c"),
        ("f1", &d.f1, "a1", "b1"),
        ("g1", &d.g1, "b1", "c1"),
        ("alpha", &d.alpha, "a", "a1"),
        ("beta", &d.beta, "b", "b1"),
        ("gamma", &d.gamma, "c", "c1"),
    ] {
        maps.insert(name.to_string(), map_decl(h, from, to));
    }
    DiagramDoc {
        groups,
        maps,
        diagram: DiagramBinding::Snake {
            f: "f".into(),
            g: "g".into(),
            f1: "f1".into(),
            g1: "g1".into(),
            alpha: "alpha".into(),
            beta: "beta".into(),
            gamma: "gamma".into(),
        },
    }
}

pub fn four_to_doc(d: &FourDiagram) -> DiagramDoc {
    let mut groups = BTreeMap::new();
    for (name, g) in [
        ("a", &d.a),
        ("b", &d.b),
        ("c", &d.c),
        ("d", &d.d),
        ("a1", &d.a1),
        ("b1", &d.b1),
        ("c1", &d.c1),
        ("d1", &d.d1),
    ] {
        groups.insert(name.to_string(), group_decl(g));
    }
    let mut maps = BTreeMap::new();
    for (name, h, from, to) in [
        ("f", &d.f, "a", "b"),
        ("g", &d.g, "b", "c"),
        ("h", &d.h, "c", "d"),
        ("f1", &d.f1, "a1", "b1"),
        ("g1", &d.g1, "b1", "c1"),
        ("h1", &d.h1, "c1", "d1"),
        ("alpha", &d.alpha, "a", "a1"),
        ("beta", &d.beta, "b", "b1"),
        ("gamma", &d.gamma, "c", "c1"),
        ("delta", &d.delta, "d", "d1"),
    ] {
        maps.insert(name.to_string(), map_decl(h, from, to));
    }
    DiagramDoc {
        groups,
        maps,
        diagram: DiagramBinding::Four {
            f: "f".into(),
            g: "g".into(),
            h: "h".into(),
            f1: "f1".into(),
            g1: "g1".into(),
            h1: "h1".into(),
            alpha: "alpha".into(),
            beta: "beta".into(),
            gamma: "gamma".into(),
            delta: "delta".into(),
        },
    }
}

pub fn ring_to_doc(alpha: &Hom, beta: &Hom) -> DiagramDoc {
    let mut groups = BTreeMap::new();
    groups.insert("a".to_string(), group_decl(alpha.source()));
    groups.insert("b".to_string(), group_decl(alpha.target()));
    groups.insert("c".to_string(), group_decl(beta.target()));
    let mut maps = BTreeMap::new();
    maps.insert("alpha".to_string(), map_decl(alpha, "a", "b"));
    maps.insert("beta".to_string(), map_decl(beta, "b", "c"));
    DiagramDoc {
        groups,
        maps,
        diagram: DiagramBinding::Ring {
            alpha: "alpha".into(),
            beta: "beta".into(),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_int_reads_numbers_and_decimal_strings() {
        let v: Vec<JsonInt> = serde_json::from_str(r#"[7, -3, "123456789012345678901234567890"]"#)
            .expect("mixed forms parse");
        assert_eq!(v[0].0, BigInt::from(7));
        assert_eq!(v[1].0, BigInt::from(-3));
        assert_eq!(
            v[2].0,
            "123456789012345678901234567890".parse::<BigInt>().unwrap()
        );
        assert!(serde_json::from_str::<JsonInt>("\"twelve\"").is_err());
    }

    #[test]
    fn json_int_writes_strings_only_beyond_64_bits() {
        let small = serde_json::to_string(&JsonInt(BigInt::from(-42))).unwrap();
        assert_eq!(small, "-42");
        let big: BigInt = "99999999999999999999999999".parse().unwrap();
        let s = serde_json::to_string(&JsonInt(big.clone())).unwrap();
        assert_eq!(s, format!("\"{big}\""));
        // and it round-trips
        let back: JsonInt = serde_json::from_str(&s).unwrap();
        assert_eq!(back.0, big);
    }

    #[test]
    fn resolve_rejects_ragged_relations_and_bad_wiring() {
        let text = r#"{
            "groups": {"a": {"gens": 2, "relations": [[1]]}},
            "maps": {},
            "diagram": {"kind": "ring", "alpha": "x", "beta": "y"}
        }"#;
        let doc: DiagramDoc = serde_json::from_str(text).unwrap();
        let err = doc.resolve().unwrap_err();
        assert!(err.contains("relation column"), "{err}");

        let text = r#"{
            "groups": {"z": {"gens": 1, "relations": []}, "w": {"gens": 1, "relations": [[3]]}},
            "maps": {
                "u": {"from": "z", "to": "z", "matrix": [[2]]},
                "v": {"from": "w", "to": "w", "matrix": [[2]]}
            },
            "diagram": {"kind": "ring", "alpha": "u", "beta": "v"}
        }"#;
        let doc: DiagramDoc = serde_json::from_str(text).unwrap();
        let err = doc.resolve().unwrap_err();
        assert!(err.contains("beta"), "{err}");
    }
}
