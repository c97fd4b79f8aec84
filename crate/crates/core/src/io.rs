//! Reading and writing the semigroup JSON document
//! `{"q": 2, "generators": [[3,0],[1,1]], "order": {"kind": "grlex"}}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::{OrderSpec, Point, Semigroup};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    q: usize,
    generators: Vec<Point>,
    #[serde(default = "default_order")]
    order: OrderSpec,
}

fn default_order() -> OrderSpec {
    OrderSpec::GRLEX
}

/// A parsed document. `minimalized` is set when the input list had to be
/// reduced to the minimal generating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Loaded {
    pub semigroup: Semigroup,
    pub order: OrderSpec,
    pub minimalized: bool,
}

pub fn parse_semigroup(text: &str) -> Result<Loaded> {
    let doc: Document =
        serde_json::from_str(text).map_err(|e| Error::validation(format!("malformed semigroup JSON: {e}")))?;
    if doc.generators.is_empty() {
        return Err(Error::validation("no generators"));
    }
    if let Some(g) = doc.generators.iter().find(|g| g.len() != doc.q) {
        return Err(Error::LengthMismatch { expected: doc.q, found: g.len() });
    }
    let before = doc.generators.len();
    let semigroup = Semigroup::minimalize(doc.generators.clone())?;
    let minimalized = semigroup.num_generators() != before;
    if minimalized {
        log::warn!(
            "input generators were not minimal; kept {} of {}",
            semigroup.num_generators(),
            before
        );
    }
    Ok(Loaded { semigroup, order: doc.order, minimalized })
}

pub fn semigroup_to_value(s: &Semigroup, order: OrderSpec) -> serde_json::Value {
    serde_json::to_value(Document { q: s.dim(), generators: s.generators().to_vec(), order })
        .expect("semigroup document serializes")
}

pub fn semigroup_to_json(s: &Semigroup, order: OrderSpec) -> String {
    semigroup_to_value(s, order).to_string()
}
