//! The five commands behind the `whq` binary.
//!
//! Exit-code contract: 0 when every law holds, 1 on a law failure, 2 on
//! parse or I/O errors.  Reports are deterministic byte for byte for a
//! given input, in both text and JSON form.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use serde_json::json;

use whq_core::exactlin::{inverse, FieldSpec, Mor};
use whq_core::generators::{free_hl_module, hl_module_on_h, regular_hopf_module};
use whq_core::hopfmod::{check_hopf_module, fundamental_theorem, HopfModule};
use whq_core::modcat::{certify_equivalence, induce, HlMorphismSample, RightHLModule};
use whq_core::report::LawReport;
use whq_core::whq::{BaseObject, Side, WeakHopfQuasigroup};

use crate::format::{ModuleFile, StructureFile};
use crate::genspec::{self, SpecError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
}

impl ReportFormat {
    pub fn parse(text: &str) -> Result<Self, String> {
        match text {
            "text" => Ok(ReportFormat::Text),
            "json" => Ok(ReportFormat::Json),
            other => Err(format!("unknown report format {other:?}; use text or json")),
        }
    }
}

#[derive(Debug)]
pub struct CmdResult {
    pub exit_code: i32,
    pub output: String,
}

const EXIT_OK: i32 = 0;
const EXIT_LAW: i32 = 1;
const EXIT_PARSE: i32 = 2;

fn parse_failure(msg: impl Into<String>) -> CmdResult {
    CmdResult {
        exit_code: EXIT_PARSE,
        output: format!("error: {}\n", msg.into()),
    }
}

fn law_failure(msg: impl Into<String>) -> CmdResult {
    CmdResult {
        exit_code: EXIT_LAW,
        output: format!("error: {}\n", msg.into()),
    }
}

fn read_structure(path: &Path) -> Result<WeakHopfQuasigroup, CmdResult> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| parse_failure(format!("{}: {e}", path.display())))?;
    let doc: StructureFile = serde_json::from_str(&text)
        .map_err(|e| parse_failure(format!("{}: {e}", path.display())))?;
    doc.to_whq()
        .map_err(|e| parse_failure(format!("{}: {e}", path.display())))
}

fn checks_json(rep: &LawReport) -> serde_json::Value {
    json!(rep
        .checks
        .iter()
        .map(|c| {
            json!({
                "label": c.label,
                "pass": c.pass,
                "witness": c.witness.map(|w| json!([w.row, w.col])),
            })
        })
        .collect::<Vec<_>>())
}

fn render_report(rep: &LawReport, extra: &[String], fmt: ReportFormat, command: &str) -> CmdResult {
    let pass = rep.all_pass();
    let output = match fmt {
        ReportFormat::Text => {
            let mut out = String::new();
            for line in extra {
                out.push_str(line);
                out.push('\n');
            }
            out.push_str(&rep.to_string());
            out.push_str(if pass { "RESULT: PASS\n" } else { "RESULT: FAIL\n" });
            out
        }
        ReportFormat::Json => {
            let doc = json!({
                "command": command,
                "info": extra,
                "checks": checks_json(rep),
                "pass": pass,
            });
            format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializable"))
        }
    };
    CmdResult {
        exit_code: if pass { EXIT_OK } else { EXIT_LAW },
        output,
    }
}

/// `whq validate`: per-axiom and per-identity verdicts.
pub fn cmd_validate(path: &Path, fmt: ReportFormat) -> CmdResult {
    let h = match read_structure(path) {
        Ok(h) => h,
        Err(r) => return r,
    };
    let mut rep = h.check_axioms();
    if rep.all_pass() {
        match h.identity_suite() {
            Ok(suite) => rep.checks.extend(suite.checks),
            Err(e) => return law_failure(e.to_string()),
        }
    }
    render_report(&rep, &[], fmt, "validate")
}

fn matrix_lines(label: &str, m: &Mor, out: &mut Vec<String>) {
    out.push(format!("{label}:"));
    for i in 0..m.dst() {
        let row: Vec<String> = (0..m.src()).map(|j| m.at(i, j).to_string()).collect();
        out.push(format!("  [{}]", row.join(", ")));
    }
}

/// `whq derive`: projections, base dimensions, Casimir and Frobenius
/// verdicts, associativity diagnostics.
pub fn cmd_derive(path: &Path, fmt: ReportFormat) -> CmdResult {
    let h = match read_structure(path) {
        Ok(h) => h,
        Err(r) => return r,
    };
    let axioms = h.check_axioms();
    if let Some(c) = axioms.first_failure() {
        return law_failure(format!("axiom {} fails", c.label));
    }
    let mut info = Vec::new();
    info.push(format!("field: {}", h.field()));
    info.push(format!("dim: {}", h.dim()));
    match h.associativity_witness() {
        None => info.push("associative: yes".into()),
        Some((a, b, c)) => info.push(format!("nonassociative: witness ({a}, {b}, {c})")),
    }
    let pro = match h.projections() {
        Ok(p) => p,
        Err(e) => return law_failure(e.to_string()),
    };
    matrix_lines("Pi^L", &pro.pi_l, &mut info);
    matrix_lines("Pi^R", &pro.pi_r, &mut info);
    let unit_counit = h
        .unit()
        .compose(h.counit())
        .expect("unit and counit compose");
    info.push(format!(
        "hopf-quasigroup degeneration (Pi^L = unit∘counit): {}",
        if pro.pi_l == unit_counit { "yes" } else { "no" }
    ));
    let mut rep = LawReport::new();
    for side in [Side::Left, Side::Right] {
        let tag = match side {
            Side::Left => "H_L",
            Side::Right => "H_R",
        };
        match h.base_object(side) {
            Ok(b) => {
                info.push(format!("dim {tag} = {}", b.rank()));
                rep.record_bool(
                    format!("{tag} casimir+frobenius"),
                    whq_core::whq::casimir_check(&b),
                );
                rep.record_bool(format!("{tag} monoid"), b.monoid.is_monoid());
            }
            Err(e) => return law_failure(e.to_string()),
        }
    }
    render_report(&rep, &info, fmt, "derive")
}

fn read_module(
    path: &Path,
    h: &Arc<WeakHopfQuasigroup>,
) -> Result<HopfModule, CmdResult> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| parse_failure(format!("{}: {e}", path.display())))?;
    let doc: ModuleFile = serde_json::from_str(&text)
        .map_err(|e| parse_failure(format!("{}: {e}", path.display())))?;
    doc.to_module(h)
        .map_err(|e| parse_failure(format!("{}: {e}", path.display())))
}

fn require_valid(h: WeakHopfQuasigroup) -> Result<Arc<WeakHopfQuasigroup>, CmdResult> {
    let axioms = h.check_axioms();
    match axioms.first_failure() {
        None => Ok(Arc::new(h)),
        Some(c) => Err(law_failure(format!("axiom {} fails", c.label))),
    }
}

/// `whq fundamental`: certify `M ≅ M^{coH}×H` for the regular module or a
/// module loaded from a file.
pub fn cmd_fundamental(path: &Path, module: Option<&Path>, fmt: ReportFormat) -> CmdResult {
    let h = match read_structure(path).and_then(require_valid) {
        Ok(h) => h,
        Err(r) => return r,
    };
    let m = match module {
        None => match regular_hopf_module(&h) {
            Ok(m) => m,
            Err(e) => return law_failure(e.to_string()),
        },
        Some(p) => match read_module(p, &h) {
            Ok(m) => m,
            Err(r) => return r,
        },
    };
    let axioms = check_hopf_module(&m);
    if let Some(c) = axioms.first_failure() {
        return law_failure(format!("module axiom {} fails", c.label));
    }
    match fundamental_theorem(&m) {
        Ok(iso) => {
            let extra = vec![
                format!("module dim: {}", m.dim()),
                format!("cross object dim: {}", iso.forward.dst()),
            ];
            render_report(&iso.evidence, &extra, fmt, "fundamental")
        }
        Err(e) => law_failure(e.to_string()),
    }
}

fn random_invertible(field: FieldSpec, d: usize, rng: &mut ChaCha12Rng) -> (Mor, Mor) {
    // Product of unit-triangular factors: always invertible, exactly.
    let mut lower = Mor::identity(field, d);
    let mut upper = Mor::identity(field, d);
    for i in 0..d {
        for j in 0..i {
            lower.set(i, j, field.from_i64(rng.random_range(-2..=2)));
            upper.set(j, i, field.from_i64(rng.random_range(-2..=2)));
        }
    }
    let t = lower.compose(&upper).expect("square");
    let t_inv = inverse(&t).expect("unit-triangular product is invertible");
    (t, t_inv)
}

fn random_conjugated_module(
    h: &Arc<WeakHopfQuasigroup>,
    base: &BaseObject,
    blocks: usize,
    rng: &mut ChaCha12Rng,
) -> RightHLModule {
    let free = free_hl_module(h, base, blocks).expect("free modules satisfy the laws");
    let d = free.dim();
    let (t, t_inv) = random_invertible(h.field(), d, rng);
    let conjugated = t
        .compose(free.action())
        .expect("shapes agree")
        .compose(
            &t_inv
                .kron(&Mor::identity(h.field(), base.rank()))
                .expect("same field"),
        )
        .expect("shapes agree");
    RightHLModule::new(Arc::clone(h), base.clone(), d, conjugated)
        .expect("conjugated actions satisfy the laws")
}

/// `whq equivalence`: certify the equivalence between strong Hopf modules
/// and right `H_L`-modules over a default sample family (plus optional
/// module files and seeded random right modules).
pub fn cmd_equivalence(
    path: &Path,
    extra_modules: &[PathBuf],
    random: usize,
    seed: u64,
    fmt: ReportFormat,
) -> CmdResult {
    let h = match read_structure(path).and_then(require_valid) {
        Ok(h) => h,
        Err(r) => return r,
    };
    let base = match h.base_object(Side::Left) {
        Ok(b) => b,
        Err(e) => return law_failure(e.to_string()),
    };
    let mut samples_n = vec![
        free_hl_module(&h, &base, 1).expect("free module"),
        free_hl_module(&h, &base, 2).expect("free module"),
        hl_module_on_h(&h, &base).expect("H is a right H_L-module"),
    ];
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    for k in 0..random {
        samples_n.push(random_conjugated_module(&h, &base, 1 + k % 2, &mut rng));
    }
    let r = base.rank();
    let fold = Mor::from_fn(h.field(), r, 2 * r, |i, j| {
        if j % r == i {
            h.field().one()
        } else {
            h.field().zero()
        }
    });
    let morphisms = vec![HlMorphismSample {
        from: 1,
        to: 0,
        map: fold,
    }];

    let mut samples_m = Vec::new();
    match regular_hopf_module(&h) {
        Ok(m) => samples_m.push(m),
        Err(e) => return law_failure(e.to_string()),
    }
    for n_mod in [&samples_n[0], &samples_n[2]] {
        match induce(n_mod) {
            Ok(ind) => samples_m.push(ind.hopf),
            Err(e) => return law_failure(e.to_string()),
        }
    }
    for p in extra_modules {
        match read_module(p, &h) {
            Ok(m) => samples_m.push(m),
            Err(r) => return r,
        }
    }

    let mut info = vec![
        format!("dim H = {}, dim H_L = {}", h.dim(), base.rank()),
        format!(
            "samples: {} right H_L-modules, {} Hopf modules",
            samples_n.len(),
            samples_m.len()
        ),
    ];
    match certify_equivalence(&h, &samples_n, &morphisms, &samples_m) {
        Ok(cert) => render_report(&cert.report, &info, fmt, "equivalence"),
        Err(e) => {
            info.push(format!("aborted: {e}"));
            let mut out = info.join("\n");
            out.push('\n');
            CmdResult {
                exit_code: EXIT_LAW,
                output: format!("{out}RESULT: FAIL\n"),
            }
        }
    }
}

/// `whq gen`: build a generator spec and emit its structure file.  Tensor
/// composites are emitted with their axiom report; a failing probe is still
/// written, but the exit code says so.
pub fn cmd_gen(spec: &str, field: &str, out: Option<&Path>) -> CmdResult {
    let field = match genspec::parse_field(field) {
        Ok(f) => f,
        Err(e) => return parse_failure(e),
    };
    let built = match genspec::build(spec, field) {
        Ok(b) => b,
        Err(SpecError::Syntax(e)) => return parse_failure(e),
        Err(SpecError::Construction(e)) => return law_failure(e),
    };
    let doc = StructureFile::from_whq(&built.candidate);
    let text = format!(
        "{}\n",
        serde_json::to_string_pretty(&doc).expect("serializable")
    );
    let mut output = String::new();
    match out {
        Some(p) => {
            if let Err(e) = std::fs::write(p, &text) {
                return parse_failure(format!("{}: {e}", p.display()));
            }
            output.push_str(&format!("wrote {}\n", p.display()));
        }
        None => output.push_str(&text),
    }
    let pass = built.report.all_pass();
    if !pass {
        output.push_str(&built.report.to_string());
    }
    output.push_str(if pass { "RESULT: PASS\n" } else { "RESULT: FAIL\n" });
    CmdResult {
        exit_code: if pass { EXIT_OK } else { EXIT_LAW },
        output,
    }
}
