//! Generator specs for `whq gen`.
//!
//! Grammar:
//! ```text
//! spec  := "tensor(" spec "," spec ")" | atom
//! atom  := "s3" | "s4" | "klein" | "cyclic:<k>"
//!        | "chein:<group-atom>" | "discrete:<k>" | "pair:<k>"
//! ```
//! A spec names a validated construction; the tensor composite is the one
//! probe whose axiom verdict is part of the answer.

use whq_core::exactlin::FieldSpec;
use whq_core::generators::{
    chein_double, group_algebra, groupoid_algebra, loop_algebra, tensor_whq, CayleyTable,
    FiniteGroupoid, TensorProbe,
};
use whq_core::report::LawReport;
use whq_core::whq::WeakHopfQuasigroup;

/// The result of building a spec: the candidate plus the axiom report that
/// already certified it (generators) or probed it (tensor composites).
pub struct Built {
    pub candidate: WeakHopfQuasigroup,
    pub report: LawReport,
}

/// Spec errors split by exit-code class: syntax problems are parse errors,
/// failed constructions are law failures.
#[derive(Debug)]
pub enum SpecError {
    Syntax(String),
    Construction(String),
}

impl std::fmt::Display for SpecError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SpecError::Syntax(m) | SpecError::Construction(m) => write!(f, "{m}"),
        }
    }
}

pub fn parse_field(text: &str) -> Result<FieldSpec, String> {
    let t = text.trim();
    if t.eq_ignore_ascii_case("q") {
        return Ok(FieldSpec::Q);
    }
    if let Some(p) = t
        .strip_prefix("fp:")
        .or_else(|| t.strip_prefix("Fp:"))
        .or_else(|| t.strip_prefix("FP:"))
    {
        let p: u64 = p.parse().map_err(|_| format!("bad prime {p:?}"))?;
        return FieldSpec::fp(p).map_err(|e| e.to_string());
    }
    Err(format!("unknown field {text:?}; use Q or fp:<prime>"))
}

fn group_table(atom: &str) -> Result<CayleyTable, SpecError> {
    if atom == "s3" {
        return Ok(CayleyTable::symmetric_group(3));
    }
    if atom == "s4" {
        return Ok(CayleyTable::symmetric_group(4));
    }
    if atom == "klein" {
        return Ok(CayleyTable::direct_product(
            &CayleyTable::cyclic(2),
            &CayleyTable::cyclic(2),
        ));
    }
    if let Some(k) = atom.strip_prefix("cyclic:") {
        let k: usize = k
            .parse()
            .map_err(|_| SpecError::Syntax(format!("bad order {k:?}")))?;
        if k == 0 {
            return Err(SpecError::Syntax("cyclic order must be positive".into()));
        }
        return Ok(CayleyTable::cyclic(k));
    }
    Err(SpecError::Syntax(format!("unknown group spec {atom:?}")))
}

fn build_atom(atom: &str, field: FieldSpec) -> Result<Built, SpecError> {
    let bad_count =
        |k: &str| SpecError::Syntax(format!("bad object count {k:?}"));
    let whq = if let Some(g) = atom.strip_prefix("chein:") {
        let doubled = chein_double(&group_table(g)?)
            .map_err(|e| SpecError::Construction(e.to_string()))?;
        loop_algebra(&doubled, field)
    } else if let Some(k) = atom.strip_prefix("discrete:") {
        let k: usize = k.parse().map_err(|_| bad_count(k))?;
        groupoid_algebra(&FiniteGroupoid::discrete(k), field)
    } else if let Some(k) = atom.strip_prefix("pair:") {
        let k: usize = k.parse().map_err(|_| bad_count(k))?;
        if k == 0 {
            return Err(SpecError::Syntax(
                "pair groupoid needs at least one object".into(),
            ));
        }
        groupoid_algebra(&FiniteGroupoid::pair(k), field)
    } else {
        group_algebra(&group_table(atom)?, field)
    };
    let candidate = whq.map_err(|e| SpecError::Construction(e.to_string()))?;
    let report = candidate.check_axioms();
    Ok(Built { candidate, report })
}

/// Split `tensor(a,b)` arguments at the top-level comma.
fn split_tensor_args(inner: &str) -> Result<(&str, &str), SpecError> {
    let mut depth = 0usize;
    for (pos, ch) in inner.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => return Ok((&inner[..pos], &inner[pos + 1..])),
            _ => {}
        }
    }
    Err(SpecError::Syntax(format!(
        "tensor spec {inner:?} needs two arguments"
    )))
}

/// Build the structure named by `spec` over `field`.  For tensor
/// composites the returned report is the probe's verdict; for everything
/// else the constructors have already certified the axioms.
pub fn build(spec: &str, field: FieldSpec) -> Result<Built, SpecError> {
    let s = spec.trim();
    if let Some(rest) = s.strip_prefix("tensor(") {
        let inner = rest.strip_suffix(')').ok_or_else(|| {
            SpecError::Syntax(format!("unbalanced parentheses in {spec:?}"))
        })?;
        let (left, right) = split_tensor_args(inner)?;
        let a = build(left, field)?;
        let b = build(right, field)?;
        let TensorProbe { candidate, report } = tensor_whq(&a.candidate, &b.candidate)
            .map_err(|e| SpecError::Construction(e.to_string()))?;
        return Ok(Built { candidate, report });
    }
    build_atom(s, field)
}
