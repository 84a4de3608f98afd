//! JSON-lines archive of factorizations, one per line:
//! `{"n":5,"curves":[{"S":[2,3,4],"conj":""},{"S":[1,2,4],"conj":"s4^-1"}]}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::factorization::Factorization;
use crate::mcg::{BraidWord, Curve};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveRecord {
    #[serde(rename = "S")]
    pub set: Vec<usize>,
    pub conj: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationRecord {
    pub n: usize,
    pub curves: Vec<CurveRecord>,
}

impl From<&Factorization> for FactorizationRecord {
    fn from(f: &Factorization) -> Self {
        let curves = f
            .curves()
            .iter()
            .map(|c| CurveRecord { set: c.enclosed().to_vec(), conj: c.conjugator().to_string() })
            .collect();
        FactorizationRecord { n: f.n(), curves }
    }
}

impl FactorizationRecord {
    pub fn to_factorization(&self) -> Result<Factorization> {
        let curves = self
            .curves
            .iter()
            .map(|c| {
                let w: BraidWord = c.conj.parse()?;
                Curve::new(self.n, &c.set, &w)
            })
            .collect::<Result<Vec<_>>>()?;
        Factorization::new(self.n, curves)
    }
}

pub fn encode_line(f: &Factorization) -> String {
    serde_json::to_string(&FactorizationRecord::from(f)).expect("records always serialize")
}

pub fn decode_line(line: &str) -> Result<Factorization> {
    let rec: FactorizationRecord =
        serde_json::from_str(line).map_err(|e| Error::InvalidArgument(format!("archive line: {e}")))?;
    rec.to_factorization()
}

/// Encodes each factorization on its own line.
pub fn encode(fs: &[Factorization]) -> String {
    fs.iter().map(|f| encode_line(f) + "\n").collect()
}

/// Decodes every non-blank line.
pub fn decode(text: &str) -> Result<Vec<Factorization>> {
    text.lines().filter(|l| !l.trim().is_empty()).map(decode_line).collect()
}
