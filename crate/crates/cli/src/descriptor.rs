//! Canonical request descriptors and their content-addressed cache keys.

use serde::Serialize;
use sha2::{Digest, Sha256};

/// Everything that determines a cacheable result.  Field order is part of
/// the key format, so fields stay alphabetical and `None`s are serialized
/// rather than skipped.
#[derive(Serialize, Debug)]
pub struct RequestDescriptor {
    pub command: String,
    pub curve: Option<(u32, u32)>,
    pub engine_version: String,
    pub family: Option<String>,
    pub max_n: Option<u64>,
    pub n_max: Option<u64>,
    pub normalization: Option<String>,
    pub p_max: Option<u64>,
    pub template_sha256: Option<String>,
}

impl RequestDescriptor {
    pub fn table(
        family: &str,
        curve: Option<(u32, u32)>,
        normalization: &str,
        max_n: u64,
    ) -> Self {
        RequestDescriptor {
            command: "table".into(),
            curve,
            engine_version: bhlab_core::ENGINE_VERSION.into(),
            family: Some(family.into()),
            max_n: Some(max_n),
            n_max: None,
            normalization: Some(normalization.into()),
            p_max: None,
            template_sha256: None,
        }
    }

    pub fn sweep(template_sha256: &str, p_max: u64, n_max: u64) -> Self {
        RequestDescriptor {
            command: "sweep".into(),
            curve: None,
            engine_version: bhlab_core::ENGINE_VERSION.into(),
            family: None,
            max_n: None,
            n_max: Some(n_max),
            normalization: None,
            p_max: Some(p_max),
            template_sha256: Some(template_sha256.into()),
        }
    }

    pub fn canonical_json(&self) -> String {
        serde_json::to_string(self).expect("descriptor serialization cannot fail")
    }

    pub fn key(&self) -> String {
        sha256_hex(self.canonical_json().as_bytes())
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    let digest = hasher.finalize();
    let mut out = String::with_capacity(64);
    for b in digest {
        out.push_str(&format!("{:02x}", b));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_are_stable_and_distinct() {
        let a = RequestDescriptor::table("bernoulli", None, "classical", 20);
        let b = RequestDescriptor::table("bernoulli", None, "classical", 20);
        assert_eq!(a.key(), b.key());
        assert_eq!(a.key().len(), 64);

        let wider = RequestDescriptor::table("bernoulli", None, "classical", 21);
        assert_ne!(a.key(), wider.key());

        let curved = RequestDescriptor::table("gbh", Some((2, 4)), "canonical", 20);
        assert_ne!(a.key(), curved.key());

        let sweep = RequestDescriptor::sweep("00ff", 13, 30);
        assert_ne!(a.key(), sweep.key());
    }

    #[test]
    fn canonical_json_spells_out_absent_fields() {
        let d = RequestDescriptor::table("hurwitz", None, "classical", 8);
        let json = d.canonical_json();
        assert!(json.starts_with("{\"command\":\"table\""));
        assert!(json.contains("\"curve\":null"));
        assert!(json.contains("\"template_sha256\":null"));
    }

    #[test]
    fn sha256_of_empty_input_matches_the_published_value() {
        assert_eq!(
            sha256_hex(b""),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
    }
}
