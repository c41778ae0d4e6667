//! Fixture sessions shipped inside the binary, one per coalgebra plus one
//! holding the algebras.

use crate::session::{Session, SessionError};

pub const BUNDLE_NAMES: [&str; 6] = ["K1", "Fp", "DP2", "MC2", "G2", "algebras"];

fn source(name: &str) -> Option<&'static str> {
    Some(match name {
        "K1" => include_str!("../fixtures/k1.json"),
        "Fp" => include_str!("../fixtures/fp.json"),
        "DP2" => include_str!("../fixtures/dp2.json"),
        "MC2" => include_str!("../fixtures/mc2.json"),
        "G2" => include_str!("../fixtures/g2.json"),
        "algebras" => include_str!("../fixtures/algebras.json"),
        _ => return None,
    })
}

/// Raw JSON of a bundle.
pub fn bundle_json(name: &str) -> Option<&'static str> {
    source(name)
}

pub fn bundle(name: &str) -> Result<Session, SessionError> {
    let text = source(name).ok_or_else(|| SessionError::Parse(format!("no bundled session `{name}`")))?;
    Session::from_json(text)
}
