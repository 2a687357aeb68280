//! JSON encodings for games, enumerations, relations, set systems, vectors,
//! descriptor bundles and face reports.
//!
//! Labels always refer to a [`GroundSet`]; rationals are canonical `"p/q"` strings.

use std::collections::BTreeSet;

use serde_json::{json, Map, Value};

use crate::cones::RationalVector;
use crate::error::{invalid, Result};
use crate::faces::{FaceDescriptorBundle, FaceReport};
use crate::games::{ElementaryTriplet, Game};
use crate::ground::{GroundSet, Subset};
use crate::permutograph::{EnumSet, Enumeration};
use crate::rational::{self, Rational};
use crate::relations::Relation;
use crate::setsystems::SetSystem;

fn labels(ground: &GroundSet, s: Subset) -> Value {
    Value::from(ground.subset_labels(s))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| invalid(format!("{what} must be an array")))
}

fn as_str<'a>(v: &'a Value, what: &str) -> Result<&'a str> {
    v.as_str()
        .ok_or_else(|| invalid(format!("{what} must be a string")))
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key)
        .ok_or_else(|| invalid(format!("missing field {key:?}")))
}

fn subset_from(ground: &GroundSet, v: &Value) -> Result<Subset> {
    let names = as_array(v, "set")?
        .iter()
        .map(|x| as_str(x, "label"))
        .collect::<Result<Vec<_>>>()?;
    ground.subset_of(&names)
}

fn rational_from(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => rational::parse(s),
        Value::Number(n) if n.is_i64() => Ok(rational::int(n.as_i64().unwrap_or_default())),
        _ => Err(invalid(format!("value {v} is not a rational string"))),
    }
}

pub fn ground_to_json(ground: &GroundSet) -> Value {
    Value::from(ground.labels().to_vec())
}

pub fn ground_from_json(v: &Value) -> Result<GroundSet> {
    let names = as_array(v, "ground")?
        .iter()
        .map(|x| as_str(x, "label").map(str::to_string))
        .collect::<Result<Vec<_>>>()?;
    GroundSet::new(names)
}

pub fn enumeration_to_json(ground: &GroundSet, pi: &Enumeration) -> Value {
    Value::from(
        pi.order()
            .map(|e| ground.label(e).to_string())
            .collect::<Vec<_>>(),
    )
}

pub fn enumeration_from_json(ground: &GroundSet, v: &Value) -> Result<Enumeration> {
    let order = as_array(v, "enumeration")?
        .iter()
        .map(|x| ground.index_of(as_str(x, "label")?))
        .collect::<Result<Vec<_>>>()?;
    if order.len() != ground.len() {
        return Err(invalid("enumeration must list every element exactly once"));
    }
    Enumeration::new(order)
}

pub fn enum_set_to_json(ground: &GroundSet, s: &EnumSet) -> Value {
    Value::from(
        s.iter()
            .map(|p| enumeration_to_json(ground, p))
            .collect::<Vec<_>>(),
    )
}

pub fn enum_set_from_json(ground: &GroundSet, v: &Value) -> Result<EnumSet> {
    let members = as_array(v, "enumeration set")?
        .iter()
        .map(|x| enumeration_from_json(ground, x))
        .collect::<Result<Vec<_>>>()?;
    EnumSet::from_members(ground.len(), members)
}

/// `{"reflexive": bool, "pairs": [[u, v], ...]}`; with `reflexive` the
/// diagonal pairs are omitted.
pub fn relation_to_json(ground: &GroundSet, r: &Relation) -> Value {
    let n = r.ground_size();
    let reflexive = (0..n).all(|u| r.contains(u, u));
    let pairs: Vec<Value> = r
        .pairs()
        .into_iter()
        .filter(|(u, v)| !(reflexive && u == v))
        .map(|(u, v)| json!([ground.label(u), ground.label(v)]))
        .collect();
    json!({ "reflexive": reflexive, "pairs": pairs })
}

pub fn relation_from_json(ground: &GroundSet, v: &Value) -> Result<Relation> {
    let n = ground.len();
    let mut r = Relation::empty(n);
    let reflexive = match v.get("reflexive") {
        None => false,
        Some(b) => b
            .as_bool()
            .ok_or_else(|| invalid("\"reflexive\" must be a boolean"))?,
    };
    if reflexive {
        r = Relation::diagonal(n);
    }
    for p in as_array(field(v, "pairs")?, "pairs")? {
        let pair = as_array(p, "pair")?;
        if pair.len() != 2 {
            return Err(invalid("pairs must have two labels"));
        }
        let u = ground.index_of(as_str(&pair[0], "label")?)?;
        let w = ground.index_of(as_str(&pair[1], "label")?)?;
        r.insert(u, w);
    }
    Ok(r)
}

/// Label arrays sorted by size, then lexicographically by ground order.
pub fn set_system_to_json(ground: &GroundSet, d: &SetSystem) -> Value {
    Value::from(
        d.sorted()
            .into_iter()
            .map(|s| labels(ground, s))
            .collect::<Vec<_>>(),
    )
}

pub fn set_system_from_json(ground: &GroundSet, v: &Value) -> Result<SetSystem> {
    let members = as_array(v, "set system")?
        .iter()
        .map(|x| subset_from(ground, x))
        .collect::<Result<Vec<_>>>()?;
    SetSystem::from_members(ground.len(), members)
}

pub fn vector_to_json(ground: &GroundSet, x: &RationalVector) -> Value {
    let mut m = Map::new();
    for (i, v) in x.0.iter().enumerate() {
        m.insert(
            ground.label(i).to_string(),
            Value::from(rational::format(v)),
        );
    }
    Value::Object(m)
}

pub fn vector_from_json(ground: &GroundSet, v: &Value) -> Result<RationalVector> {
    let m = v
        .as_object()
        .ok_or_else(|| invalid("vector must be an object"))?;
    if m.len() != ground.len() {
        return Err(invalid("vector must have one entry per element"));
    }
    let entries = ground
        .labels()
        .iter()
        .map(|l| {
            rational_from(
                m.get(l)
                    .ok_or_else(|| invalid(format!("missing entry {l:?}")))?,
            )
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RationalVector(entries))
}

pub fn triplet_to_json(ground: &GroundSet, t: &ElementaryTriplet) -> Value {
    json!({
        "a": ground.label(t.a()),
        "b": ground.label(t.b()),
        "C": labels(ground, t.c()),
    })
}

pub fn triplet_from_json(ground: &GroundSet, v: &Value) -> Result<ElementaryTriplet> {
    let a = ground.index_of(as_str(field(v, "a")?, "a")?)?;
    let b = ground.index_of(as_str(field(v, "b")?, "b")?)?;
    let c = subset_from(ground, field(v, "C")?)?;
    ElementaryTriplet::new(a, b, c)
}

pub fn game_to_json(ground: &GroundSet, g: &Game) -> Value {
    let mut subsets: Vec<Subset> = Subset::all(g.ground_size()).collect();
    subsets.sort_by_key(|s| s.size_lex_key());
    let values: Vec<Value> = subsets
        .into_iter()
        .map(|s| json!({ "set": labels(ground, s), "value": rational::format(g.value(s)) }))
        .collect();
    json!({ "ground": ground_to_json(ground), "values": values })
}

/// Reads a game; every subset must appear exactly once.
pub fn game_from_json(v: &Value) -> Result<(GroundSet, Game)> {
    let ground = ground_from_json(field(v, "ground")?)?;
    let n = ground.len();
    let mut values: Vec<Option<Rational>> = vec![None; 1 << n];
    for entry in as_array(field(v, "values")?, "values")? {
        let s = subset_from(&ground, field(entry, "set")?)?;
        let slot = &mut values[s.mask() as usize];
        if slot.is_some() {
            return Err(invalid(format!("duplicate entry for {}", ground.show(s))));
        }
        *slot = Some(rational_from(field(entry, "value")?)?);
    }
    let values = values
        .into_iter()
        .enumerate()
        .map(|(m, v)| {
            v.ok_or_else(|| {
                invalid(format!(
                    "missing entry for {}",
                    ground.show(Subset(m as u32))
                ))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let g = Game::new(n, values)?;
    Ok((ground, g))
}

pub fn parse_game(text: &str) -> Result<(GroundSet, Game)> {
    let v: Value =
        serde_json::from_str(text).map_err(|e| invalid(format!("malformed JSON: {e}")))?;
    game_from_json(&v)
}

pub fn bundle_to_json(ground: &GroundSet, b: &FaceDescriptorBundle) -> Value {
    json!({
        "ground": ground_to_json(ground),
        "en_part": b.en_part.iter().map(|s| enum_set_to_json(ground, s)).collect::<Vec<_>>(),
        "fan_pos": b.fan_pos.iter().map(|r| relation_to_json(ground, r)).collect::<Vec<_>>(),
        "ti_str": b.ti_str.iter().map(|d| set_system_to_json(ground, d)).collect::<Vec<_>>(),
        "in_str": b.in_str.iter().map(|t| triplet_to_json(ground, t)).collect::<Vec<_>>(),
        "per_sg": b.per_sg_edges.iter()
            .map(|(p, q)| json!([enumeration_to_json(ground, p), enumeration_to_json(ground, q)]))
            .collect::<Vec<_>>(),
    })
}

pub fn bundle_from_json(v: &Value) -> Result<(GroundSet, FaceDescriptorBundle)> {
    let ground = ground_from_json(field(v, "ground")?)?;
    let g = &ground;
    let collect = |key: &str| as_array(field(v, key)?, key);
    let en_part = collect("en_part")?
        .iter()
        .map(|x| enum_set_from_json(g, x))
        .collect::<Result<BTreeSet<_>>>()?;
    let fan_pos = collect("fan_pos")?
        .iter()
        .map(|x| relation_from_json(g, x))
        .collect::<Result<BTreeSet<_>>>()?;
    let ti_str = collect("ti_str")?
        .iter()
        .map(|x| set_system_from_json(g, x))
        .collect::<Result<BTreeSet<_>>>()?;
    let in_str = collect("in_str")?
        .iter()
        .map(|x| triplet_from_json(g, x))
        .collect::<Result<BTreeSet<_>>>()?;
    let per_sg_edges = collect("per_sg")?
        .iter()
        .map(|e| {
            let pair = as_array(e, "edge")?;
            if pair.len() != 2 {
                return Err(invalid("edges have two endpoints"));
            }
            Ok((
                enumeration_from_json(g, &pair[0])?,
                enumeration_from_json(g, &pair[1])?,
            ))
        })
        .collect::<Result<BTreeSet<_>>>()?;
    let bundle = FaceDescriptorBundle {
        n: ground.len(),
        en_part,
        fan_pos,
        ti_str,
        in_str,
        per_sg_edges,
    };
    Ok((ground, bundle))
}

pub fn report_to_json(r: &FaceReport) -> Value {
    let mut m = Map::new();
    for (k, v) in r.conditions() {
        m.insert(k.to_string(), Value::Bool(v));
    }
    m.insert("agreement".into(), Value::Bool(r.agreement));
    Value::Object(m)
}

pub fn report_from_json(v: &Value) -> Result<FaceReport> {
    let get = |k: &str| {
        field(v, k)?
            .as_bool()
            .ok_or_else(|| invalid(format!("{k:?} must be a boolean")))
    };
    Ok(FaceReport {
        ii: get("ii")?,
        iii: get("iii")?,
        iv: get("iv")?,
        v: get("v")?,
        vi: get("vi")?,
        vii: get("vii")?,
        viii: get("viii")?,
        ix: get("ix")?,
        agreement: get("agreement")?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::faces::descriptors;
    use crate::games::{random_supermodular, RandomGameParams};

    #[test]
    fn game_loading_errors() {
        let ok = r#"{"ground":["a","b"],"values":[
            {"set":[],"value":"0/1"},{"set":["a"],"value":"1/2"},
            {"set":["b"],"value":"0"},{"set":["a","b"],"value":"3/1"}]}"#;
        let (g, game) = parse_game(ok).unwrap();
        assert_eq!(g.labels(), ["a", "b"]);
        assert_eq!(*game.value(Subset(1)), rational::ratio(1, 2));
        let missing = r#"{"ground":["a","b"],"values":[
            {"set":[],"value":"0"},{"set":["a"],"value":"1"},{"set":["b"],"value":"0"}]}"#;
        assert!(parse_game(missing)
            .unwrap_err()
            .to_string()
            .contains("missing"));
        let dup = r#"{"ground":["a"],"values":[
            {"set":[],"value":"0"},{"set":["a"],"value":"1"},{"set":["a"],"value":"2"}]}"#;
        assert!(parse_game(dup)
            .unwrap_err()
            .to_string()
            .contains("duplicate"));
        assert!(parse_game("{").is_err());
        let nonzero =
            r#"{"ground":["a"],"values":[{"set":[],"value":"1"},{"set":["a"],"value":"1"}]}"#;
        assert!(parse_game(nonzero).is_err());
    }

    #[test]
    fn bundle_and_report_roundtrip() {
        let ground = GroundSet::letters(3).unwrap();
        let g = random_supermodular(11, RandomGameParams::new(3, 2, 2)).unwrap();
        let b = descriptors(&g).unwrap();
        let text = serde_json::to_string(&bundle_to_json(&ground, &b)).unwrap();
        let (g2, b2) = bundle_from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!((g2, b2), (ground.clone(), b));
        let r = crate::faces::theorem_report(&g, &g).unwrap();
        assert_eq!(report_from_json(&report_to_json(&r)).unwrap(), r);
    }

    #[test]
    fn relation_encoding() {
        let ground = GroundSet::letters(3).unwrap();
        let r = Relation::reflexive_from(3, [(0, 1)]).unwrap();
        let v = relation_to_json(&ground, &r);
        assert_eq!(v, json!({"reflexive": true, "pairs": [["a", "b"]]}));
        assert_eq!(relation_from_json(&ground, &v).unwrap(), r);
        let strict = Relation::from_pairs(3, [(0, 0), (1, 2)]).unwrap();
        assert_eq!(
            relation_from_json(&ground, &relation_to_json(&ground, &strict)).unwrap(),
            strict
        );
    }

    #[test]
    fn set_system_order() {
        let ground = GroundSet::letters(3).unwrap();
        let v = set_system_to_json(&ground, &SetSystem::power_set(2));
        let g2 = GroundSet::letters(2).unwrap();
        assert_eq!(v, json!([[], ["a"], ["b"], ["a", "b"]]));
        let _ = ground;
        assert_eq!(
            set_system_from_json(&g2, &v).unwrap(),
            SetSystem::power_set(2)
        );
    }
}
