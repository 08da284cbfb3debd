//! The algebra definition file format: UTF-8 JSON, schema version 1.
//!
//! Parsing is strict: unknown fields are rejected, every basis name must
//! resolve, scalar literals follow the grammar of the scalar module, the
//! bi-character must validate and the loaded algebra must pass every axiom
//! check. Serialization is canonical (normalized field and entry order), so
//! serialize -> parse -> serialize is byte-stable.

use serde::{Deserialize, Serialize};

use crate::algebra::{
    AlgebraData, AlgebraFlags, AxiomReport, PoissonColorAlgebra, StructureTensor,
};
use crate::grading::{BiCharacter, GroupSpec};
use crate::scalar::parse_scalar;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("JSON syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unsupported format version {0}, expected {FORMAT_VERSION}")]
    Version(u32),
    #[error("group definition invalid: {0}")]
    Grading(#[from] crate::grading::GradingError),
    #[error("unknown basis name {0:?}")]
    UnknownBasisName(String),
    #[error("coefficient {text:?} for basis {basis:?}: {source}")]
    Coefficient {
        text: String,
        basis: String,
        source: crate::scalar::ScalarError,
    },
    #[error("algebra structure invalid: {0}")]
    Algebra(#[from] crate::algebra::AlgebraError),
    #[error("bi-character invalid: {0:?}")]
    BiCharacter(Vec<String>),
    #[error("axiom checks failed: {failed:?}")]
    Axioms {
        failed: Vec<crate::algebra::Axiom>,
        report: Box<AxiomReport>,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupSpecFile {
    free_rank: usize,
    torsion: Vec<u64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BiCharacterFile {
    cyclotomic_order: u64,
    matrix: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BasisFile {
    name: String,
    gdeg: Vec<i64>,
    ldeg: Vec<i64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermFile {
    basis: String,
    coeff: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TensorEntryFile {
    left: String,
    right: String,
    result: Vec<TermFile>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FlagsFile {
    check_commutative: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraFile {
    pck_format: u32,
    name: String,
    scalar_order: u64,
    group_g: GroupSpecFile,
    group_lambda: GroupSpecFile,
    bicharacter: BiCharacterFile,
    basis: Vec<BasisFile>,
    product: Vec<TensorEntryFile>,
    bracket: Vec<TensorEntryFile>,
    flags: FlagsFile,
}

fn tensor_from_file(
    entries: &[TensorEntryFile],
    names: &std::collections::BTreeMap<String, usize>,
    scalar_order: u64,
) -> Result<StructureTensor, FormatError> {
    let mut tensor = StructureTensor::new();
    for entry in entries {
        let i = *names
            .get(&entry.left)
            .ok_or_else(|| FormatError::UnknownBasisName(entry.left.clone()))?;
        let j = *names
            .get(&entry.right)
            .ok_or_else(|| FormatError::UnknownBasisName(entry.right.clone()))?;
        for term in &entry.result {
            let k = *names
                .get(&term.basis)
                .ok_or_else(|| FormatError::UnknownBasisName(term.basis.clone()))?;
            let coeff = parse_scalar(scalar_order, &term.coeff).map_err(|source| {
                FormatError::Coefficient {
                    text: term.coeff.clone(),
                    basis: term.basis.clone(),
                    source,
                }
            })?;
            tensor.add_term(i, j, k, coeff);
        }
    }
    Ok(tensor)
}

/// Parse and fully validate an algebra file. The returned algebra has passed
/// the bi-character congruences and every axiom check.
pub fn parse_algebra(text: &str) -> Result<PoissonColorAlgebra, FormatError> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(|e| FormatError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    if file.pck_format != FORMAT_VERSION {
        return Err(FormatError::Version(file.pck_format));
    }
    let g_spec = GroupSpec::new(file.group_g.free_rank, file.group_g.torsion.clone())?;
    let lambda_spec = GroupSpec::new(
        file.group_lambda.free_rank,
        file.group_lambda.torsion.clone(),
    )?;
    let bichar = BiCharacter::from_i64(file.bicharacter.cyclotomic_order, &file.bicharacter.matrix);

    let mut names = std::collections::BTreeMap::new();
    let mut basis = Vec::with_capacity(file.basis.len());
    for (i, b) in file.basis.iter().enumerate() {
        names.insert(b.name.clone(), i);
        basis.push((
            b.name.clone(),
            g_spec.element_from_i64(&b.gdeg)?,
            lambda_spec.element_from_i64(&b.ldeg)?,
        ));
    }
    let product = tensor_from_file(&file.product, &names, file.scalar_order)?;
    let bracket = tensor_from_file(&file.bracket, &names, file.scalar_order)?;

    let validation = bichar.validate(&g_spec);
    if !validation.is_valid() {
        return Err(FormatError::BiCharacter(validation.failures));
    }

    let algebra = PoissonColorAlgebra::new(AlgebraData {
        name: file.name,
        scalar_order: file.scalar_order,
        g_spec,
        lambda_spec,
        bichar,
        basis,
        product,
        bracket,
        flags: AlgebraFlags {
            check_commutative: file.flags.check_commutative,
        },
    })?;

    let report = algebra.validate_all();
    if !report.all_pass() {
        return Err(FormatError::Axioms {
            failed: report.failed_axioms(),
            report: Box::new(report),
        });
    }
    Ok(algebra)
}

fn coords_to_i64(e: &crate::grading::GroupElement) -> Vec<i64> {
    e.coords()
        .iter()
        .map(|c| i64::try_from(c).expect("degree coordinate fits in the file format"))
        .collect()
}

fn tensor_to_file(
    tensor: &StructureTensor,
    algebra: &PoissonColorAlgebra,
) -> Vec<TensorEntryFile> {
    let mut out = Vec::new();
    for (i, j) in tensor.pairs() {
        let result: Vec<TermFile> = tensor
            .get(i, j)
            .iter()
            .map(|(k, c)| TermFile {
                basis: algebra.descriptor(*k).name.clone(),
                coeff: c.to_string(),
            })
            .collect();
        if result.is_empty() {
            continue;
        }
        out.push(TensorEntryFile {
            left: algebra.descriptor(i).name.clone(),
            right: algebra.descriptor(j).name.clone(),
            result,
        });
    }
    out
}

/// Canonical serialization: basis in index order, tensor entries in
/// (left, right) index order, result terms in basis index order, scalar
/// literals in canonical form, two-space-indented JSON with a trailing
/// newline.
pub fn serialize_algebra(algebra: &PoissonColorAlgebra) -> String {
    let file = AlgebraFile {
        pck_format: FORMAT_VERSION,
        name: algebra.name().to_string(),
        scalar_order: algebra.scalar_order(),
        group_g: GroupSpecFile {
            free_rank: algebra.g_spec().free_rank(),
            torsion: algebra.g_spec().torsion_orders().to_vec(),
        },
        group_lambda: GroupSpecFile {
            free_rank: algebra.lambda_spec().free_rank(),
            torsion: algebra.lambda_spec().torsion_orders().to_vec(),
        },
        bicharacter: BiCharacterFile {
            cyclotomic_order: algebra.bicharacter().cyclotomic_order(),
            matrix: algebra
                .bicharacter()
                .matrix()
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|c| i64::try_from(c).expect("matrix entry fits in the file format"))
                        .collect()
                })
                .collect(),
        },
        basis: algebra
            .basis()
            .iter()
            .map(|b| BasisFile {
                name: b.name.clone(),
                gdeg: coords_to_i64(&b.gdeg),
                ldeg: coords_to_i64(&b.ldeg),
            })
            .collect(),
        product: tensor_to_file(algebra.product_tensor(), algebra),
        bracket: tensor_to_file(algebra.bracket_tensor(), algebra),
        flags: FlagsFile {
            check_commutative: algebra.flags().check_commutative,
        },
    };
    let mut text = serde_json::to_string_pretty(&file).expect("serialization cannot fail");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn round_trip_is_byte_stable() {
        for a in corpus::builtin_corpus() {
            let once = serialize_algebra(&a);
            let parsed = parse_algebra(&once).unwrap_or_else(|e| {
                panic!("{} failed to parse its own serialization: {e}", a.name())
            });
            let twice = serialize_algebra(&parsed);
            assert_eq!(once, twice, "{} not byte-stable", a.name());
            assert_eq!(parsed, a, "{} round-trip changed the algebra", a.name());
        }
    }

    #[test]
    fn syntax_error_carries_position() {
        let err = parse_algebra("{ not json").unwrap_err();
        assert!(matches!(err, FormatError::Syntax { .. }));
    }

    #[test]
    fn unknown_basis_name_rejected() {
        let mut text = serialize_algebra(&corpus::sl2());
        text = text.replace("\"left\": \"h\"", "\"left\": \"nope\"");
        let err = parse_algebra(&text).unwrap_err();
        assert!(matches!(err, FormatError::UnknownBasisName(name) if name == "nope"));
    }

    #[test]
    fn axiom_failure_rejected_with_report() {
        // Corrupt one bracket coefficient of sl2: {h,f} becomes +2f.
        let text = serialize_algebra(&corpus::sl2());
        let broken = text.replace(
            "\"left\": \"h\",\n      \"right\": \"f\",\n      \"result\": [\n        {\n          \"basis\": \"f\",\n          \"coeff\": \"-2\"",
            "\"left\": \"h\",\n      \"right\": \"f\",\n      \"result\": [\n        {\n          \"basis\": \"f\",\n          \"coeff\": \"2\"",
        );
        assert_ne!(text, broken, "replacement must hit");
        match parse_algebra(&broken) {
            Err(FormatError::Axioms { failed, report }) => {
                assert!(!failed.is_empty());
                assert!(!report.all_pass());
            }
            other => panic!("expected axiom failure, got {other:?}"),
        }
    }

    #[test]
    fn invalid_bicharacter_rejected() {
        let json = r#"{
  "pck_format": 1,
  "name": "bad-eps",
  "scalar_order": 3,
  "group_g": { "free_rank": 0, "torsion": [3] },
  "group_lambda": { "free_rank": 0, "torsion": [] },
  "bicharacter": { "cyclotomic_order": 3, "matrix": [[1]] },
  "basis": [],
  "product": [],
  "bracket": [],
  "flags": { "check_commutative": false }
}"#;
        let err = parse_algebra(json).unwrap_err();
        assert!(matches!(err, FormatError::BiCharacter(_)));
    }

    #[test]
    fn empty_basis_loads_as_zero_algebra() {
        let json = r#"{
  "pck_format": 1,
  "name": "zero",
  "scalar_order": 1,
  "group_g": { "free_rank": 0, "torsion": [] },
  "group_lambda": { "free_rank": 0, "torsion": [] },
  "bicharacter": { "cyclotomic_order": 1, "matrix": [] },
  "basis": [],
  "product": [],
  "bracket": [],
  "flags": { "check_commutative": false }
}"#;
        let a = parse_algebra(json).unwrap();
        assert_eq!(a.dim(), 0);
        assert!(a.validate_all().all_pass());
    }

    #[test]
    fn version_mismatch_rejected() {
        let text = serialize_algebra(&corpus::sl2()).replace("\"pck_format\": 1", "\"pck_format\": 2");
        assert!(matches!(parse_algebra(&text), Err(FormatError::Version(2))));
    }
}
