//! File formats and deterministic number formatting.
//!
//! Every emitted file is byte-identical across identical invocations:
//! floats are rendered to 12 significant digits with a fixed
//! scientific-notation cutoff, orderings are fixed, CSV uses LF line
//! endings and '.' decimals, and JSON documents carry a schema version.

use std::io::Write;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::linalg::QuditState;
use crate::mub::{unbiasedness_report, MubCollection, OrthonormalBasis};
use crate::phase::PhaseDistribution;
use crate::Result;

/// Render with 12 significant digits; scientific notation (lowercase
/// 'e') when |x| < 1e-4 or |x| >= 1e6.
pub fn fmt_sig12(x: f64) -> String {
    assert!(x.is_finite(), "refusing to format a non-finite value");
    let x = if x == 0.0 { 0.0 } else { x };
    let ax = x.abs();
    if ax != 0.0 && !(1e-4..1e6).contains(&ax) {
        return format!("{x:.11e}");
    }
    let exp10 = if ax == 0.0 {
        0
    } else {
        let rendered = format!("{ax:e}");
        rendered
            .split('e')
            .nth(1)
            .expect("exponent part present")
            .parse::<i32>()
            .expect("valid exponent")
    };
    let precision = (11 - exp10).max(0) as usize;
    format!("{x:.precision$}")
}

/// Round to the 12-significant-digit grid (used before JSON emission so
/// JSON and CSV carry the same values).
pub fn round_sig12(x: f64) -> f64 {
    fmt_sig12(x).parse().expect("formatted float parses")
}

/// On-disk state vector: `{"schema":1, "dim":d, "amplitudes":[[re,im],...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StateFile {
    pub schema: u32,
    pub dim: usize,
    pub amplitudes: Vec<[f64; 2]>,
}

/// Norm slack accepted when loading states written with finite
/// precision; beyond this the file is rejected unless renormalization
/// was requested explicitly.
pub const STATE_NORM_TOLERANCE: f64 = 1e-9;

impl StateFile {
    pub fn from_state(state: &QuditState) -> Self {
        Self {
            schema: 1,
            dim: state.dim(),
            amplitudes: state.amplitudes().iter().map(|z| [z.re, z.im]).collect(),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let file: StateFile =
            serde_json::from_str(text).map_err(|e| Error::InvalidStateFile(e.to_string()))?;
        if file.schema != 1 {
            return Err(Error::InvalidStateFile(format!(
                "unsupported schema {} (expected 1)",
                file.schema
            )));
        }
        if file.dim != file.amplitudes.len() {
            return Err(Error::InvalidStateFile(format!(
                "dim {} does not match {} amplitudes",
                file.dim,
                file.amplitudes.len()
            )));
        }
        if file.dim < 2 {
            return Err(Error::InvalidStateFile(format!(
                "dim {} too small",
                file.dim
            )));
        }
        if file.amplitudes.iter().flatten().any(|v| !v.is_finite()) {
            return Err(Error::InvalidStateFile("non-finite amplitude".into()));
        }
        Ok(file)
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::parse(&text)
    }

    /// Convert to a state vector. Without `renormalize`, the squared
    /// norm must be within 1e-9 of 1; the amplitudes are then scaled to
    /// exact unit norm. With `renormalize`, any nonzero norm is accepted.
    pub fn to_state(&self, renormalize: bool) -> Result<QuditState> {
        let amps: Vec<Complex64> = self
            .amplitudes
            .iter()
            .map(|[re, im]| Complex64::new(*re, *im))
            .collect();
        let norm_sq: f64 = amps.iter().map(|z| z.norm_sqr()).sum();
        if !renormalize && (norm_sq - 1.0).abs() > STATE_NORM_TOLERANCE {
            return Err(Error::NotNormalized {
                norm: norm_sq.sqrt(),
            });
        }
        QuditState::normalized(amps)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }
}

/// JSON document for a MUB collection.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MubDocument {
    pub schema: u32,
    pub dim: usize,
    pub bases: Vec<MubBasisRecord>,
    pub max_unbiasedness_deviation: f64,
    pub status: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MubBasisRecord {
    pub class: usize,
    pub vectors: Vec<Vec<[f64; 2]>>,
}

impl MubDocument {
    pub fn from_collection(collection: &MubCollection) -> Self {
        let report = unbiasedness_report(collection);
        let bases = collection
            .bases()
            .iter()
            .map(|basis| MubBasisRecord {
                class: basis.source_label(),
                vectors: basis
                    .vectors()
                    .iter()
                    .map(|v| {
                        v.amplitudes()
                            .iter()
                            .map(|z| [round_sig12(z.re), round_sig12(z.im)])
                            .collect()
                    })
                    .collect(),
            })
            .collect();
        Self {
            schema: 1,
            dim: collection.dim(),
            bases,
            max_unbiasedness_deviation: round_sig12(report.max_deviation),
            status: if report.passed {
                "PASS".into()
            } else {
                "FAIL".into()
            },
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let doc: MubDocument = serde_json::from_str(text)?;
        if doc.schema != 1 {
            return Err(Error::InvalidStateFile(format!(
                "unsupported schema {} (expected 1)",
                doc.schema
            )));
        }
        Ok(doc)
    }

    /// Rebuild the collection, revalidating orthonormality.
    pub fn to_collection(&self) -> Result<MubCollection> {
        let bases = self
            .bases
            .iter()
            .map(|record| {
                let vectors = record
                    .vectors
                    .iter()
                    .map(|v| {
                        QuditState::normalized(
                            v.iter().map(|[re, im]| Complex64::new(*re, *im)).collect(),
                        )
                    })
                    .collect::<Result<Vec<_>>>()?;
                OrthonormalBasis::from_vectors(record.class, vectors)
            })
            .collect::<Result<Vec<_>>>()?;
        MubCollection::from_bases(self.dim, bases)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }

    /// CSV rows `class,vector,component,re,im` with a trailing summary.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("class,vector,component,re,im\n");
        for basis in &self.bases {
            for (v, vector) in basis.vectors.iter().enumerate() {
                for (s, [re, im]) in vector.iter().enumerate() {
                    out.push_str(&format!(
                        "{},{},{},{},{}\n",
                        basis.class,
                        v,
                        s,
                        fmt_sig12(*re),
                        fmt_sig12(*im)
                    ));
                }
            }
        }
        out.push_str(&format!(
            "# max_unbiasedness_deviation {}\n# status {}\n",
            fmt_sig12(self.max_unbiasedness_deviation),
            self.status
        ));
        out
    }
}

/// CSV table for a sampled phase distribution: one angle column per
/// axis, then the density, in lexicographic grid order, with summary
/// comments at the end.
pub fn phase_distribution_csv(dist: &PhaseDistribution) -> String {
    let axes = dist.axes();
    let mut header: Vec<String> = (1..=axes).map(|j| format!("phi_{j}")).collect();
    header.push("P".into());
    let mut out = header.join(",") + "\n";
    for flat in 0..dist.len() {
        let mut fields: Vec<String> = dist.angles_at(flat).iter().map(|&a| fmt_sig12(a)).collect();
        fields.push(fmt_sig12(dist.value(flat)));
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out.push_str(&format!(
        "# riemann_sum {}\n",
        fmt_sig12(dist.riemann_sum())
    ));
    out.push_str(&format!("# min_P {}\n", fmt_sig12(dist.min_value())));
    out
}

/// JSON document for a sampled phase distribution.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PhaseDistributionDocument {
    pub schema: u32,
    pub dim: usize,
    pub grid_n: usize,
    pub values: Vec<f64>,
    pub riemann_sum: f64,
    pub min_p: f64,
}

impl PhaseDistributionDocument {
    pub fn from_distribution(dist: &PhaseDistribution) -> Self {
        Self {
            schema: 1,
            dim: dist.dim(),
            grid_n: dist.grid_n(),
            values: dist.values().iter().map(|&v| round_sig12(v)).collect(),
            riemann_sum: round_sig12(dist.riemann_sum()),
            min_p: round_sig12(dist.min_value()),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }
}

/// Write text to a file, or to the given writer when no path is set.
pub fn emit(text: &str, path: Option<&std::path::Path>, out: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sig12_fixed_range() {
        assert_eq!(fmt_sig12(0.0), "0.00000000000");
        assert_eq!(fmt_sig12(1.0), "1.00000000000");
        assert_eq!(fmt_sig12(0.5), "0.500000000000");
        assert_eq!(fmt_sig12(-0.5), "-0.500000000000");
        assert_eq!(fmt_sig12(0.025330295910584444), "0.0253302959106");
        assert_eq!(fmt_sig12(123456.789), "123456.789000");
    }

    #[test]
    fn sig12_scientific_range() {
        assert_eq!(fmt_sig12(1e-17), "1.00000000000e-17");
        assert_eq!(fmt_sig12(-2.5e7), "-2.50000000000e7");
        assert_eq!(fmt_sig12(9.87654321e-5), "9.87654321000e-5");
    }

    #[test]
    fn sig12_round_trip() {
        for &x in &[0.0, 1.0, -0.3333333333333333, 2.5e-13, 6.02e23] {
            let rounded = round_sig12(x);
            assert_eq!(round_sig12(rounded), rounded);
        }
    }

    #[test]
    fn state_file_round_trip() {
        let state = QuditState::basis_state(3, 1).unwrap();
        let file = StateFile::from_state(&state);
        let parsed = StateFile::parse(&file.to_json()).unwrap();
        let rebuilt = parsed.to_state(false).unwrap();
        for i in 0..3 {
            assert_eq!(rebuilt.amplitude(i), state.amplitude(i));
        }
    }

    #[test]
    fn state_file_norm_gate() {
        let text = r#"{"schema":1,"dim":2,"amplitudes":[[1.0,0.0],[0.1,0.0]]}"#;
        let file = StateFile::parse(text).unwrap();
        assert!(matches!(
            file.to_state(false),
            Err(Error::NotNormalized { .. })
        ));
        let state = file.to_state(true).unwrap();
        let norm: f64 = state.amplitudes().iter().map(|z| z.norm_sqr()).sum();
        assert!((norm - 1.0).abs() < 1e-14);
    }

    #[test]
    fn state_file_rejects_bad_schema_and_shape() {
        assert!(StateFile::parse(r#"{"schema":2,"dim":2,"amplitudes":[[1,0],[0,0]]}"#).is_err());
        assert!(StateFile::parse(r#"{"schema":1,"dim":3,"amplitudes":[[1,0],[0,0]]}"#).is_err());
        assert!(StateFile::parse("not json").is_err());
    }

    #[test]
    fn mub_document_round_trip_stays_unbiased() {
        use crate::mub::build_mubs;
        use crate::pauli::PrimeDim;
        let collection = build_mubs(PrimeDim::new(3).unwrap()).unwrap();
        let doc = MubDocument::from_collection(&collection);
        let parsed = MubDocument::parse(&doc.to_json()).unwrap();
        let rebuilt = parsed.to_collection().unwrap();
        let report = unbiasedness_report(&rebuilt);
        assert!(report.passed);
    }
}
