//! Append-only JSONL catalog of verified certificates.
//!
//! One record per line. The record id is the SHA-256 of the certificate's
//! canonical JSON bytes (object keys sorted), so any byte of tampering in the
//! stored certificate changes the recomputed id. `verify` re-runs the
//! certificate closure checks from the stored data alone.

use std::fs::OpenOptions;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use arrowing_core::{
    validate_cyclic_result, validate_minimality_certificate, validate_sender_certificate,
    CyclicMinimalResult, Error, MinimalityCertificate, Result, SenderCertificate,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertKind {
    Sender,
    Minimal,
    CyclicMinimal,
}

impl std::fmt::Display for CertKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CertKind::Sender => write!(f, "sender"),
            CertKind::Minimal => write!(f, "minimal"),
            CertKind::CyclicMinimal => write!(f, "cyclic_minimal"),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CatalogRecord {
    pub id: String,
    pub kind: CertKind,
    pub goal: String,
    pub host: String,
    pub timestamp: String,
    pub engine_version: String,
    pub budget_nodes: u64,
    pub certificate: serde_json::Value,
}

/// Canonical content hash of a certificate value.
pub fn certificate_id(certificate: &serde_json::Value) -> String {
    let bytes = serde_json::to_vec(certificate).expect("json values serialize");
    let digest = Sha256::digest(&bytes);
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

pub fn make_record<T: Serialize>(
    kind: CertKind,
    goal: String,
    host: String,
    timestamp: String,
    engine_version: String,
    budget_nodes: u64,
    certificate: &T,
) -> Result<CatalogRecord> {
    let value = serde_json::to_value(certificate)?;
    Ok(CatalogRecord {
        id: certificate_id(&value),
        kind,
        goal,
        host,
        timestamp,
        engine_version,
        budget_nodes,
        certificate: value,
    })
}

pub fn append(path: &Path, record: &CatalogRecord) -> Result<()> {
    let mut file = OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .map_err(|e| Error::InvalidClaim(format!("cannot open catalog {}: {e}", path.display())))?;
    let mut line = serde_json::to_string(record)?;
    line.push('\n');
    file.write_all(line.as_bytes())
        .map_err(|e| Error::InvalidClaim(format!("cannot write catalog: {e}")))?;
    Ok(())
}

pub fn load(path: &Path) -> Result<Vec<CatalogRecord>> {
    let file = std::fs::File::open(path)
        .map_err(|e| Error::InvalidClaim(format!("cannot open catalog {}: {e}", path.display())))?;
    let reader = BufReader::new(file);
    let mut records = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line =
            line.map_err(|e| Error::InvalidClaim(format!("cannot read catalog line {i}: {e}")))?;
        if line.trim().is_empty() {
            continue;
        }
        let record: CatalogRecord = serde_json::from_str(&line)
            .map_err(|e| Error::InvalidClaim(format!("bad catalog line {}: {e}", i + 1)))?;
        records.push(record);
    }
    Ok(records)
}

pub fn find(path: &Path, id: &str) -> Result<CatalogRecord> {
    load(path)?
        .into_iter()
        .find(|r| r.id == id)
        .ok_or_else(|| Error::InvalidClaim(format!("no catalog record with id {id}")))
}

/// Re-checks a stored record: the id must match the certificate bytes and the
/// certificate must pass its closure validation.
pub fn verify(record: &CatalogRecord) -> Result<()> {
    let recomputed = certificate_id(&record.certificate);
    if recomputed != record.id {
        return Err(Error::CertificateInvalid(format!(
            "stored id {} does not match certificate hash {recomputed}",
            record.id
        )));
    }
    match record.kind {
        CertKind::Sender => {
            let cert: SenderCertificate = serde_json::from_value(record.certificate.clone())?;
            validate_sender_certificate(&cert)
        }
        CertKind::Minimal => {
            let cert: MinimalityCertificate = serde_json::from_value(record.certificate.clone())?;
            validate_minimality_certificate(&cert)
        }
        CertKind::CyclicMinimal => {
            let result: CyclicMinimalResult = serde_json::from_value(record.certificate.clone())?;
            validate_cyclic_result(&result)
        }
    }
}
