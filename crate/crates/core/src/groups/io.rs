//! JSON exchange format for group elements.

use serde::{Deserialize, Serialize};

use crate::arith::{parse_scalar, ExactMatrix};

use super::{GroupContext, GroupElement, GroupError};

/// `{"group": "C3", "matrix": [[...]], "cyclotomic_order": m}` with entries
/// written as scalar literals (or plain integers) over `Q(zeta_m)(t)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub group: String,
    pub matrix: Vec<Vec<Entry>>,
    #[serde(default = "one")]
    pub cyclotomic_order: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Int(i64),
    Text(String),
}

fn one() -> u32 {
    1
}

impl ElementJson {
    pub fn from_element(g: &GroupElement) -> Self {
        let m = g.matrix();
        let order = m.order();
        let matrix = (0..m.rows())
            .map(|i| m.row(i).iter().map(|x| x.to_i64().map_or_else(|| Entry::Text(x.lifted(order).to_string()), Entry::Int)).collect())
            .collect();
        ElementJson { group: g.context().cartan_type().to_string(), matrix, cyclotomic_order: order }
    }

    pub fn to_element(&self) -> Result<GroupElement, GroupError> {
        let ctx = GroupContext::from_label(&self.group)?;
        let rows = self
            .matrix
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| match e {
                        Entry::Int(n) => parse_scalar(&n.to_string(), self.cyclotomic_order),
                        Entry::Text(s) => parse_scalar(s, self.cyclotomic_order),
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        GroupElement::new(&ctx, ExactMatrix::from_rows(rows)?)
    }
}

/// Pretty JSON with one matrix row per line.
pub fn element_to_json(g: &GroupElement) -> String {
    let e = ElementJson::from_element(g);
    let rows: Vec<String> =
        e.matrix.iter().map(|r| format!("    {}", serde_json::to_string(r).expect("row serializes"))).collect();
    format!(
        "{{\n  \"group\": {},\n  \"cyclotomic_order\": {},\n  \"matrix\": [\n{}\n  ]\n}}\n",
        serde_json::to_string(&e.group).expect("label serializes"),
        e.cyclotomic_order,
        rows.join(",\n")
    )
}

/// Parse and validate an element; errors name the violated condition.
pub fn element_from_json(src: &str) -> Result<GroupElement, GroupError> {
    let e: ElementJson = serde_json::from_str(src).map_err(|e| GroupError::Parse(e.to_string()))?;
    e.to_element()
}
