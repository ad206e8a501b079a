//! JSON export/import of fields, codes, and GRS specifications, plus the
//! machine-readable verdict format. Elements serialize as -1 for zero or
//! the discrete-log index otherwise; coordinate sets are zero-indexed.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::codes::{CodeError, LinearCode, MdsVerdict, MdsWitness};
use crate::field::{Felt, Field, FieldError};
use crate::grs::{CertificatePoly, GrsError, GrsSpec};
use crate::linalg::Matrix;
use crate::provenance::DerivationRecord;

#[derive(Debug, Error)]
pub enum ExportError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("artifact kind mismatch: expected {expected}, found {found}")]
    KindMismatch {
        expected: &'static str,
        found: String,
    },
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Grs(#[from] GrsError),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl From<serde_json::Error> for ExportError {
    fn from(e: serde_json::Error) -> Self {
        ExportError::Parse(e.to_string())
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct FieldDto {
    pub p: u64,
    pub h: u32,
    pub modulus: Vec<u64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CertificateDto {
    pub lambda: i64,
    pub h: Vec<i64>,
}

/// Top-level file format, tagged by `kind`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Artifact {
    Field(FieldDto),
    Code {
        field: FieldDto,
        n: usize,
        k: usize,
        /// Row-major element encodings, k rows of n entries.
        generator: Vec<i64>,
        provenance: DerivationRecord,
    },
    Grs {
        field: FieldDto,
        e: u32,
        extended: bool,
        k: usize,
        locators: Vec<i64>,
        multipliers: Vec<i64>,
        certificate: CertificateDto,
    },
}

/// Machine-readable check outcome.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerdictDto {
    pub claim: String,
    pub mode: String,
    pub result: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<serde_json::Value>,
}

pub fn field_to_dto(field: &Field) -> FieldDto {
    FieldDto {
        p: field.p(),
        h: field.h(),
        modulus: field.spec().modulus.clone(),
    }
}

pub fn field_from_dto(dto: &FieldDto) -> Result<Field, ExportError> {
    Ok(Field::new(dto.p, dto.h, Some(&dto.modulus))?)
}

pub fn code_to_artifact(code: &LinearCode) -> Artifact {
    Artifact::Code {
        field: field_to_dto(code.field()),
        n: code.n(),
        k: code.k(),
        generator: code.generator().data().iter().map(|x| x.encode()).collect(),
        provenance: code.provenance().clone(),
    }
}

pub fn code_from_artifact(artifact: &Artifact) -> Result<LinearCode, ExportError> {
    match artifact {
        Artifact::Code {
            field,
            n,
            k,
            generator,
            provenance,
        } => {
            let f = field_from_dto(field)?;
            if generator.len() != n * k {
                return Err(ExportError::Parse(format!(
                    "generator length {} != k*n = {}",
                    generator.len(),
                    n * k
                )));
            }
            let elements = generator
                .iter()
                .map(|&v| f.decode(v))
                .collect::<Result<Vec<Felt>, _>>()?;
            let rows: Vec<Vec<Felt>> = elements.chunks(*n).map(<[Felt]>::to_vec).collect();
            let m = Matrix::from_rows(f, rows).map_err(|e| ExportError::Parse(e.to_string()))?;
            Ok(LinearCode::new(m, provenance.clone())?)
        }
        Artifact::Grs { .. } => {
            let (spec, _, _) = grs_from_artifact(artifact)?;
            Ok(spec.generator_matrix()?)
        }
        Artifact::Field(_) => Err(ExportError::KindMismatch {
            expected: "code",
            found: "field".into(),
        }),
    }
}

pub fn grs_to_artifact(spec: &GrsSpec, e: u32, cert: &CertificatePoly) -> Artifact {
    Artifact::Grs {
        field: field_to_dto(spec.field()),
        e,
        extended: spec.extended(),
        k: spec.k(),
        locators: spec.locators().iter().map(|x| x.encode()).collect(),
        multipliers: spec.multipliers().iter().map(|x| x.encode()).collect(),
        certificate: CertificateDto {
            lambda: cert.lambda.encode(),
            h: cert.h_coeffs.iter().map(|x| x.encode()).collect(),
        },
    }
}

pub fn grs_from_artifact(
    artifact: &Artifact,
) -> Result<(GrsSpec, u32, CertificatePoly), ExportError> {
    match artifact {
        Artifact::Grs {
            field,
            e,
            extended,
            k,
            locators,
            multipliers,
            certificate,
        } => {
            let f = field_from_dto(field)?;
            let locs = locators
                .iter()
                .map(|&v| f.decode(v))
                .collect::<Result<Vec<_>, _>>()?;
            let mults = multipliers
                .iter()
                .map(|&v| f.decode(v))
                .collect::<Result<Vec<_>, _>>()?;
            let spec = GrsSpec::new(f.clone(), locs, mults, *k, *extended)?;
            let lambda = f.decode(certificate.lambda)?;
            let h = certificate
                .h
                .iter()
                .map(|&v| f.decode(v))
                .collect::<Result<Vec<_>, _>>()?;
            let cert = CertificatePoly::new(lambda, h)?;
            Ok((spec, *e, cert))
        }
        other => Err(ExportError::KindMismatch {
            expected: "grs",
            found: kind_of(other).into(),
        }),
    }
}

fn kind_of(a: &Artifact) -> &'static str {
    match a {
        Artifact::Field(_) => "field",
        Artifact::Code { .. } => "code",
        Artifact::Grs { .. } => "grs",
    }
}

pub fn to_json(a: &Artifact) -> String {
    serde_json::to_string_pretty(a).expect("artifact serializes")
}

pub fn from_json(s: &str) -> Result<Artifact, ExportError> {
    Ok(serde_json::from_str(s)?)
}

pub fn write_file(path: &std::path::Path, a: &Artifact) -> Result<(), ExportError> {
    std::fs::write(path, to_json(a))?;
    Ok(())
}

pub fn read_file(path: &std::path::Path) -> Result<Artifact, ExportError> {
    from_json(&std::fs::read_to_string(path)?)
}

pub fn mds_verdict_dto(claim: &str, mode: &str, v: &MdsVerdict) -> VerdictDto {
    let (result, witness) = match v {
        MdsVerdict::Mds => ("pass".to_string(), None),
        MdsVerdict::Probable { trials } => (format!("probable({trials})"), None),
        MdsVerdict::Unknown => ("unknown".to_string(), None),
        MdsVerdict::NotMds(w) => {
            let witness = match w {
                MdsWitness::SingularColumns(cols) => serde_json::json!({
                    "singular_columns": cols,
                }),
                MdsWitness::LowWeightWord(word) => serde_json::json!({
                    "low_weight_word": word.iter().map(|x| x.encode()).collect::<Vec<_>>(),
                }),
            };
            ("fail".to_string(), Some(witness))
        }
    };
    VerdictDto {
        claim: claim.to_string(),
        mode: mode.to_string(),
        result,
        witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build, ConstructionParams, FamilyParams};
    use crate::grs::verify_so_egrs;

    #[test]
    fn code_round_trip_is_bit_exact() {
        let f = Field::new(3, 4, None).unwrap();
        let built = build(
            &f,
            &ConstructionParams {
                e: 1,
                k: None,
                extended: true,
                family: FamilyParams::C {
                    x1: 720,
                    x2: 780,
                    r1: 1,
                },
            },
        )
        .unwrap();
        let art = code_to_artifact(&built.code);
        let json = to_json(&art);
        let back = code_from_artifact(&from_json(&json).unwrap()).unwrap();
        assert_eq!(back.generator(), built.code.generator());
        assert_eq!(back.provenance(), built.code.provenance());
    }

    #[test]
    fn grs_round_trip_re_certifies() {
        let f = Field::new(3, 4, None).unwrap();
        let built = build(
            &f,
            &ConstructionParams {
                e: 1,
                k: None,
                extended: true,
                family: FamilyParams::C {
                    x1: 720,
                    x2: 780,
                    r1: 1,
                },
            },
        )
        .unwrap();
        let art = grs_to_artifact(&built.spec, 1, &built.cert);
        let (spec, e, cert) = grs_from_artifact(&from_json(&to_json(&art)).unwrap()).unwrap();
        assert_eq!(e, 1);
        assert_eq!(spec, built.spec);
        assert_eq!(
            verify_so_egrs(&spec, e, &cert).unwrap(),
            crate::grs::SoVerdict::Certified
        );
    }

    #[test]
    fn field_artifact_rejected_as_code() {
        let f = Field::new(3, 2, None).unwrap();
        let art = Artifact::Field(field_to_dto(&f));
        assert!(code_from_artifact(&art).is_err());
    }
}
