//! Side-by-side evaluation of every route for one ideal.

use serde::Serialize;

use crate::borel::{is_strongly_stable_colon, require_borel};
use crate::decomposition::{decompose, Decomposition, IrreducibleComponent};
use crate::degree::ExtendedDegree;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::invariants::{
    a_vector_chain, a_vector_from_decomposition, reg_via_stable_truncation, report,
    strongly_stable_fast, InvariantReport, Route,
};
use crate::oracle::a0_direct;
use crate::parse::ideal_to_json;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Value {
    Scalar(ExtendedDegree),
    Vector(Vec<ExtendedDegree>),
}

/// One quantity as computed by several sources.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuantityCheck {
    pub quantity: &'static str,
    pub values: Vec<(&'static str, Value)>,
    pub equal: bool,
}

impl QuantityCheck {
    fn new(quantity: &'static str, values: Vec<(&'static str, Value)>) -> Self {
        let equal = values.windows(2).all(|w| w[0].1 == w[1].1);
        QuantityCheck {
            quantity,
            values,
            equal,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verdict {
    pub ideal: String,
    pub agree: bool,
    pub checks: Vec<QuantityCheck>,
    /// Set when the oracle was left out because it exceeded the scale guard.
    pub oracle_skipped: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<serde_json::Value>,
}

impl Verdict {
    pub fn to_json(&self) -> serde_json::Value {
        let checks: Vec<_> = self
            .checks
            .iter()
            .map(|c| {
                let values: serde_json::Map<String, serde_json::Value> = c
                    .values
                    .iter()
                    .map(|(k, v)| {
                        (
                            k.to_string(),
                            serde_json::to_value(v).expect("serializable"),
                        )
                    })
                    .collect();
                serde_json::json!({ "quantity": c.quantity, "values": values, "equal": c.equal })
            })
            .collect();
        let mut out = serde_json::json!({
            "ideal": self.ideal,
            "agree": self.agree,
            "checks": checks,
        });
        if self.oracle_skipped {
            out["oracle_skipped"] = true.into();
        }
        if let Some(c) = &self.counterexample {
            out["counterexample"] = c.clone();
        }
        out
    }
}

pub fn compare_routes(ideal: &MonomialIdeal) -> Result<Verdict> {
    require_borel(ideal)?;
    compare_routes_with(ideal, &decompose(ideal)?)
}

/// Like [`compare_routes`], but the decomposition route reads the supplied
/// decomposition instead of computing one.
pub fn compare_routes_with(
    ideal: &MonomialIdeal,
    decomposition: &Decomposition,
) -> Result<Verdict> {
    compare_inner(ideal, decomposition, false)
}

/// Like [`compare_routes_with`], but an oracle that trips the scale guard is
/// dropped from the comparison instead of failing it.
pub fn compare_routes_lenient(
    ideal: &MonomialIdeal,
    decomposition: &Decomposition,
) -> Result<Verdict> {
    compare_inner(ideal, decomposition, true)
}

fn compare_inner(
    ideal: &MonomialIdeal,
    decomposition: &Decomposition,
    lenient: bool,
) -> Result<Verdict> {
    require_borel(ideal)?;
    let by_decomposition = InvariantReport::from_a_vector(
        Route::Decomposition,
        a_vector_from_decomposition(decomposition)?,
    );
    let by_chain = InvariantReport::from_a_vector(Route::Chain, a_vector_chain(ideal)?);
    let by_oracle = match report(ideal, Route::Oracle) {
        Ok(r) => Some(r),
        Err(Error::ScaleGuard { .. }) if lenient => None,
        Err(e) => return Err(e),
    };
    let vec = |v: &Vec<ExtendedDegree>| Value::Vector(v.clone());

    let mut checks = vec![
        QuantityCheck::new(
            "a_module",
            vec![
                (
                    "decomposition",
                    vec(by_decomposition.a_module.as_ref().unwrap()),
                ),
                ("chain", vec(by_chain.a_module.as_ref().unwrap())),
            ],
        ),
        QuantityCheck::new(
            "reg_t_module",
            vec![
                ("decomposition", vec(&by_decomposition.reg_t_module)),
                ("chain", vec(&by_chain.reg_t_module)),
            ]
            .into_iter()
            .chain(by_oracle.as_ref().map(|o| ("oracle", vec(&o.reg_t_module))))
            .collect(),
        ),
        QuantityCheck::new(
            "astar_t_module",
            vec![
                ("decomposition", vec(&by_decomposition.astar_t_module)),
                ("chain", vec(&by_chain.astar_t_module)),
            ]
            .into_iter()
            .chain(
                by_oracle
                    .as_ref()
                    .map(|o| ("oracle", vec(&o.astar_t_module))),
            )
            .collect(),
        ),
    ];

    let mut reg_ideal = vec![
        ("decomposition", vec(&by_decomposition.reg_t_ideal)),
        ("chain", vec(&by_chain.reg_t_ideal)),
    ];
    let mut astar_ideal = vec![
        ("decomposition", vec(&by_decomposition.astar_t_ideal)),
        ("chain", vec(&by_chain.astar_t_ideal)),
    ];
    if let Some(o) = &by_oracle {
        reg_ideal.push(("oracle", vec(&o.reg_t_ideal)));
        astar_ideal.push(("oracle", vec(&o.astar_t_ideal)));
    }
    if is_strongly_stable_colon(ideal)? {
        let (reg, astar) = strongly_stable_fast(ideal)?;
        reg_ideal.push(("strongly_stable", Value::Vector(reg)));
        astar_ideal.push(("strongly_stable", Value::Vector(astar)));
    }
    checks.push(QuantityCheck::new("reg_t_ideal", reg_ideal));
    checks.push(QuantityCheck::new("astar_t_ideal", astar_ideal));

    checks.push(QuantityCheck::new(
        "a0_module",
        vec![
            ("decomposition", Value::Scalar(by_decomposition.sat)),
            ("chain", Value::Scalar(by_chain.sat)),
            ("direct", Value::Scalar(a0_direct(ideal)?)),
        ],
    ));
    let mut reg = vec![("shift", Value::Scalar(by_decomposition.reg_module + 1))];
    if let Some(o) = &by_oracle {
        reg.push(("oracle", Value::Scalar(o.reg_ideal)));
    }
    reg.push((
        "stable_truncation",
        Value::Scalar(reg_via_stable_truncation(ideal)?),
    ));
    checks.push(QuantityCheck::new("reg_ideal", reg));

    let agree = checks.iter().all(|c| c.equal);
    let counterexample = (!agree).then(|| {
        serde_json::json!({
            "ideal": ideal_to_json(ideal),
            "decomposition": decomposition.to_json()["components"],
            "disagreements": checks.iter().filter(|c| !c.equal).map(|c| c.quantity).collect::<Vec<_>>(),
        })
    });
    Ok(Verdict {
        ideal: ideal.to_string(),
        agree,
        checks,
        oracle_skipped: by_oracle.is_none(),
        counterexample,
    })
}

/// Negative-control fixture: the true decomposition with one exponent of a
/// component of largest total degree raised by one, so the a-vector read
/// from it is wrong in exactly one entry.
pub fn corrupted_decomposition(ideal: &MonomialIdeal) -> Result<Decomposition> {
    let d = decompose(ideal)?;
    let mut comps: Vec<IrreducibleComponent> = d.components().to_vec();
    let top = comps
        .iter()
        .map(IrreducibleComponent::total)
        .max()
        .expect("nonempty decomposition");
    let k = comps.iter().position(|q| q.total() == top).unwrap();
    let mut b = comps[k].b().to_vec();
    if let Some(e) = b.iter_mut().find(|e| **e > 0) {
        *e += 1;
    }
    comps[k] = IrreducibleComponent::new(b);
    Ok(Decomposition::from_parts_unchecked(comps, ideal.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degree::Finite;
    use crate::parse::parse_ideal;

    #[test]
    fn example_2_7_agrees() {
        let i = parse_ideal("vars x,y,z; x^4, x^2*z^3, y^4, y^3*z^3").unwrap();
        let v = compare_routes(&i).unwrap();
        assert!(v.agree, "{:#?}", v);
        assert!(v.counterexample.is_none());
        let reg = v.checks.iter().find(|c| c.quantity == "reg_ideal").unwrap();
        assert!(reg
            .values
            .iter()
            .all(|(_, x)| *x == Value::Scalar(Finite(9))));
    }

    #[test]
    fn corrupted_fixture_disagrees() {
        let i = parse_ideal("vars x,y,z; x^4, x^2*z^3, y^4, y^3*z^3").unwrap();
        let bad = corrupted_decomposition(&i).unwrap();
        let v = compare_routes_with(&i, &bad).unwrap();
        assert!(!v.agree);
        let bundle = v.counterexample.unwrap();
        assert!(bundle["disagreements"]
            .as_array()
            .unwrap()
            .contains(&"a_module".into()));
    }
}
