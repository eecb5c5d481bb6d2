//! JSON input schema for sheaves, groups and varieties.

use crate::polyq::RationalPoly;
use crate::ratio::{parse_rat, Rat};
use crate::rootdata::{builtin_datum, GroupDatum, Representation, WeightEntry};
use crate::sheafmodel::{CombinatorialRhoSheaf, Summand, VarietyDescriptor};
use num::bigint::BigInt;
use serde::Deserialize;

#[derive(Debug, thiserror::Error)]
pub enum SchemaError {
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("schema: {0}")]
    Invalid(String),
}

impl From<crate::ratio::RatParseError> for SchemaError {
    fn from(e: crate::ratio::RatParseError) -> Self {
        SchemaError::Invalid(e.to_string())
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum VarietyRaw {
    Preset { preset: String },
    Explicit {
        dim: usize,
        #[serde(rename = "A_d")]
        a_d: String,
        todd_line: String,
        #[serde(default)]
        name: Option<String>,
    },
}

#[derive(Deserialize)]
#[serde(untagged)]
enum GroupRaw {
    Spec(String),
    Custom {
        torus_rank: usize,
        central_basis: Vec<Vec<String>>,
        simple_roots: Vec<Vec<String>>,
        simple_coroots: Vec<Vec<String>>,
        fund_coweights: Vec<Vec<String>>,
        #[serde(default)]
        name: Option<String>,
    },
}

#[derive(Deserialize)]
struct WeightRaw {
    weight: Vec<i64>,
    #[serde(default = "one")]
    mult: u32,
}

fn one() -> u32 {
    1
}

#[derive(Deserialize)]
struct SummandRaw {
    factor: usize,
    index: usize,
    hp: Vec<String>,
    #[serde(default = "one")]
    rank: u32,
}

#[derive(Deserialize)]
struct SheafRaw {
    variety: VarietyRaw,
    group: GroupRaw,
    representation: Vec<Vec<WeightRaw>>,
    summands: Vec<SummandRaw>,
}

fn parse_rat_rows(rows: &[Vec<String>]) -> Result<Vec<Vec<Rat>>, SchemaError> {
    rows.iter()
        .map(|row| row.iter().map(|s| Ok(parse_rat(s)?)).collect())
        .collect()
}

fn variety_from_raw(raw: VarietyRaw) -> Result<VarietyDescriptor, SchemaError> {
    match raw {
        VarietyRaw::Preset { preset } => {
            let rest = preset
                .strip_prefix('P')
                .or_else(|| preset.strip_prefix('p'))
                .ok_or_else(|| SchemaError::Invalid(format!("unknown variety preset {preset:?}")))?;
            let d: usize = rest
                .parse()
                .map_err(|_| SchemaError::Invalid(format!("unknown variety preset {preset:?}")))?;
            if d == 0 {
                return Err(SchemaError::Invalid("P0 is not a valid preset".into()));
            }
            Ok(VarietyDescriptor::projective_space(d))
        }
        VarietyRaw::Explicit { dim, a_d, todd_line, name } => {
            VarietyDescriptor::new(
                dim,
                parse_rat(&a_d)?,
                parse_rat(&todd_line)?,
                name.unwrap_or_default(),
            )
            .map_err(|e| SchemaError::Invalid(e.to_string()))
        }
    }
}

fn group_from_raw(raw: GroupRaw) -> Result<GroupDatum, SchemaError> {
    match raw {
        GroupRaw::Spec(spec) => builtin_datum(&spec).map_err(|e| SchemaError::Invalid(e.to_string())),
        GroupRaw::Custom {
            torus_rank,
            central_basis,
            simple_roots,
            simple_coroots,
            fund_coweights,
            name,
        } => GroupDatum::new(
            torus_rank,
            parse_rat_rows(&central_basis)?,
            parse_rat_rows(&simple_roots)?,
            parse_rat_rows(&simple_coroots)?,
            parse_rat_rows(&fund_coweights)?,
            name.unwrap_or_else(|| "custom".into()),
        )
        .map_err(|e| SchemaError::Invalid(e.to_string())),
    }
}

pub fn parse_sheaf(input: &str) -> Result<CombinatorialRhoSheaf, SchemaError> {
    let raw: SheafRaw = serde_json::from_str(input)?;
    let variety = variety_from_raw(raw.variety)?;
    let datum = group_from_raw(raw.group)?;
    let factors: Vec<Vec<WeightEntry>> = raw
        .representation
        .into_iter()
        .map(|f| {
            f.into_iter()
                .map(|w| WeightEntry {
                    weight: w.weight.iter().map(|&x| BigInt::from(x)).collect(),
                    mult: w.mult,
                })
                .collect()
        })
        .collect();
    let rep = Representation::new(datum.torus_rank, factors)
        .map_err(|e| SchemaError::Invalid(e.to_string()))?;
    let summands = raw
        .summands
        .into_iter()
        .map(|s| {
            Ok(Summand {
                factor: s.factor,
                index: s.index,
                hp: RationalPoly::from_strings(&s.hp)?,
                rank: s.rank,
            })
        })
        .collect::<Result<Vec<_>, SchemaError>>()?;
    CombinatorialRhoSheaf::new(variety, datum, rep, summands)
        .map_err(|e| SchemaError::Invalid(e.to_string()))
}

/// Parses a cocharacter argument like "[1,0,-2]".
pub fn parse_lambda(input: &str) -> Result<Vec<BigInt>, SchemaError> {
    let coords: Vec<i64> = serde_json::from_str(input)?;
    Ok(coords.into_iter().map(BigInt::from).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::rat;

    #[test]
    fn parse_preset_and_custom_group() {
        let input = r#"{
            "variety": {"preset": "P1"},
            "group": {
                "torus_rank": 1,
                "central_basis": [["1"]],
                "simple_roots": [],
                "simple_coroots": [],
                "fund_coweights": []
            },
            "representation": [[{"weight": [1]}]],
            "summands": [{"factor": 0, "index": 0, "hp": ["1", "1"]}]
        }"#;
        let sheaf = parse_sheaf(input).unwrap();
        assert_eq!(sheaf.variety.dim, 1);
        assert_eq!(sheaf.variety.todd_line, rat(1, 1));
        assert_eq!(sheaf.datum.torus_rank, 1);
        assert_eq!(sheaf.summands[0].rank, 1);
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(parse_sheaf("{").is_err());
        let bad_group = r#"{
            "variety": {"preset": "P1"},
            "group": "q(5)",
            "representation": [[{"weight": [1]}]],
            "summands": [{"factor": 0, "index": 0, "hp": ["1", "1"]}]
        }"#;
        assert!(parse_sheaf(bad_group).is_err());
        let bad_ref = r#"{
            "variety": {"preset": "P1"},
            "group": "gl(1)",
            "representation": [[{"weight": [1]}]],
            "summands": [{"factor": 0, "index": 3, "hp": ["1", "1"]}]
        }"#;
        assert!(parse_sheaf(bad_ref).is_err());
    }

    #[test]
    fn parse_lambda_forms() {
        assert_eq!(parse_lambda("[1,0,-2]").unwrap(), crate::rootdata::cochar(&[1, 0, -2]));
        assert!(parse_lambda("1,2").is_err());
    }
}
