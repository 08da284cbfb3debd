//! The analysis pipeline and its deterministic report.
//!
//! `analyze` runs everything the library knows how to establish about one
//! algebra and returns a plain-data summary that serializes byte-identically
//! for identical inputs: JSON for machines, an indented text form for
//! humans. Sections requiring a symmetric support are omitted (with a note)
//! when the support is one-sided.

use std::fmt::Write as _;

use serde::Serialize;

use crate::algebra::{CheckStatus, PoissonColorAlgebra};
use crate::connections::{
    check_symmetric_support, compute_supports, connection_classes, is_connected, ConnectionError,
    SupportData, WitnessChain,
};
use crate::decomposition::decompose;
use crate::grading::GroupElement;
use crate::simplicity::{simple_decomposition, simplicity_verdict, SimplicityVerdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy)]
pub struct AnalysisOptions {
    /// Seed for the sampling fallback of the simplicity oracle.
    pub seed: u64,
    /// Accepted for interface stability; analysis is sequential and its
    /// output does not depend on this value.
    pub threads: usize,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions { seed: 0, threads: 1 }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct BiCharacterSummary {
    pub valid: bool,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CounterexampleSummary {
    pub basis: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct AxiomCheckSummary {
    pub axiom: String,
    pub status: String,
    pub counterexamples: Vec<CounterexampleSummary>,
    pub truncated: bool,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct AxiomSummary {
    pub all_pass: bool,
    pub checks: Vec<AxiomCheckSummary>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SupportSummary {
    pub sigma_lambda: Vec<String>,
    pub sigma_g: Vec<String>,
    #[serde(rename = "symmetric_support")]
    pub symmetric: bool,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct WitnessSummary {
    pub from: String,
    pub to: String,
    pub connected: bool,
    pub factors: Vec<String>,
    pub partial_products: Vec<String>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct IdealSummary {
    pub class_rep: String,
    pub class: Vec<String>,
    pub one_dimension: usize,
    pub vee_dimension: usize,
    pub total_dimension: usize,
    pub is_subalgebra: bool,
    pub is_graded_ideal: bool,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct DecompositionSummary {
    pub u_dimension: usize,
    pub u_basis: Vec<String>,
    pub ideals: Vec<IdealSummary>,
    pub orthogonality: Vec<Vec<bool>>,
    pub covers: bool,
    pub is_direct: bool,
    pub center_dimension: usize,
    pub identity_part_generated: bool,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CriterionSummary {
    pub center_zero: bool,
    pub identity_part_generated: bool,
    pub single_class: bool,
    pub simple: bool,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct OracleSummary {
    pub simple: bool,
    pub exact: bool,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SimplicitySummary {
    pub symmetric_support: bool,
    pub maximal_length: bool,
    pub multiplicative: bool,
    pub multiplicativity_failures: Vec<String>,
    pub applicable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub criterion: Option<CriterionSummary>,
    pub oracle: OracleSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agreement: Option<bool>,
    /// Verdicts for each block of the simple decomposition, when its
    /// hypotheses hold.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ideal_verdicts: Option<Vec<IdealVerdictSummary>>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct IdealVerdictSummary {
    pub class_rep: String,
    pub dimension: usize,
    pub criterion_simple: Option<bool>,
    pub oracle_simple: bool,
    pub oracle_exact: bool,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct AnalysisReport {
    pub name: String,
    pub dimension: usize,
    pub scalar_order: u64,
    pub bicharacter: BiCharacterSummary,
    pub axioms: AxiomSummary,
    pub support: SupportSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classes: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<DecompositionSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub simplicity: Option<SimplicitySummary>,
    pub notes: Vec<String>,
}

/// Stable human-facing ordering of degree sets: lexicographic on the
/// rendered string, so `z` precedes `z^-1` precedes `z^2`.
fn sorted_display(
    spec: &crate::grading::GroupSpec,
    elements: impl IntoIterator<Item = GroupElement>,
    multiplicative: bool,
) -> Vec<String> {
    let mut rendered: Vec<String> = elements
        .into_iter()
        .map(|e| {
            if multiplicative {
                spec.format_multiplicative(&e)
            } else {
                spec.format_additive(&e)
            }
        })
        .collect();
    rendered.sort();
    rendered
}

fn axiom_summary(algebra: &PoissonColorAlgebra) -> AxiomSummary {
    let report = algebra.validate_all();
    AxiomSummary {
        all_pass: report.all_pass(),
        checks: report
            .checks
            .iter()
            .map(|c| AxiomCheckSummary {
                axiom: c.axiom.name().to_string(),
                status: match c.status {
                    CheckStatus::Pass => "pass",
                    CheckStatus::Fail => "fail",
                    CheckStatus::Skipped => "skipped",
                }
                .to_string(),
                counterexamples: c
                    .counterexamples
                    .iter()
                    .map(|ce| CounterexampleSummary {
                        basis: ce.basis_names.clone(),
                        lhs: algebra.format_vector(&ce.lhs),
                        rhs: algebra.format_vector(&ce.rhs),
                    })
                    .collect(),
                truncated: c.truncated,
            })
            .collect(),
    }
}

fn simplicity_summary(
    algebra: &PoissonColorAlgebra,
    verdict: &SimplicityVerdict,
    options: &AnalysisOptions,
) -> SimplicitySummary {
    let lambda_spec = algebra.lambda_spec();
    let g_spec = algebra.g_spec();
    let ideal_verdicts = simple_decomposition(algebra, options.seed).ok().map(|sd| {
        sd.report
            .ideals
            .iter()
            .zip(&sd.ideal_verdicts)
            .map(|(ideal, v)| IdealVerdictSummary {
                class_rep: lambda_spec.format_multiplicative(&ideal.class_rep),
                dimension: ideal.total.dim(),
                criterion_simple: v.criterion.as_ref().map(|c| c.simple),
                oracle_simple: v.oracle.simple,
                oracle_exact: v.oracle.exact,
            })
            .collect()
    });
    SimplicitySummary {
        symmetric_support: verdict.symmetric_support,
        maximal_length: verdict.maximal_length,
        multiplicative: verdict.multiplicative,
        multiplicativity_failures: verdict
            .multiplicativity_failures
            .iter()
            .map(|f| {
                format!(
                    "({}, {}) x ({}, {})",
                    lambda_spec.format_multiplicative(&f.left.0),
                    g_spec.format_additive(&f.left.1),
                    lambda_spec.format_multiplicative(&f.right.0),
                    g_spec.format_additive(&f.right.1),
                )
            })
            .collect(),
        applicable: verdict.applicable,
        criterion: verdict.criterion.as_ref().map(|c| CriterionSummary {
            center_zero: c.center_zero,
            identity_part_generated: c.identity_part_generated,
            single_class: c.single_class,
            simple: c.simple,
        }),
        oracle: OracleSummary {
            simple: verdict.oracle.simple,
            exact: verdict.oracle.exact,
        },
        agreement: verdict.agreement,
        ideal_verdicts,
    }
}

/// Convention notes attached to every report.
pub fn convention_notes() -> Vec<String> {
    vec![
        "convention: multiplicativity is required only for component pairs whose degree product lies in the support".to_string(),
        "convention: the identity-part generation condition pairs every support degree with its inverse, in both the product and the bracket".to_string(),
    ]
}

/// Axioms, bi-character and supports only: the cheap sections used by the
/// `validate` and `support` commands.
pub fn analyze_validation(algebra: &PoissonColorAlgebra) -> AnalysisReport {
    let validation = algebra.bicharacter().validate(algebra.g_spec());
    let supports = compute_supports(algebra);
    AnalysisReport {
        name: algebra.name().to_string(),
        dimension: algebra.dim(),
        scalar_order: algebra.scalar_order(),
        bicharacter: BiCharacterSummary {
            valid: validation.is_valid(),
            failures: validation.failures,
        },
        axioms: axiom_summary(algebra),
        support: SupportSummary {
            sigma_lambda: sorted_display(
                algebra.lambda_spec(),
                supports.sigma_lambda.iter().cloned(),
                true,
            ),
            sigma_g: sorted_display(algebra.g_spec(), supports.sigma_g.iter().cloned(), false),
            symmetric: check_symmetric_support(&supports),
        },
        classes: None,
        witness: None,
        decomposition: None,
        simplicity: None,
        notes: convention_notes(),
    }
}

/// Run the full pipeline on a validated algebra.
pub fn analyze(algebra: &PoissonColorAlgebra, options: &AnalysisOptions) -> AnalysisReport {
    let lambda_spec = algebra.lambda_spec();
    let g_spec = algebra.g_spec();
    let validation = algebra.bicharacter().validate(g_spec);
    let supports = compute_supports(algebra);
    let symmetric = check_symmetric_support(&supports);
    let support = SupportSummary {
        sigma_lambda: sorted_display(lambda_spec, supports.sigma_lambda.iter().cloned(), true),
        sigma_g: sorted_display(g_spec, supports.sigma_g.iter().cloned(), false),
        symmetric,
    };
    let mut notes = convention_notes();

    let (classes, decomposition, simplicity) = if symmetric {
        let classes = connection_classes(&supports).expect("support is symmetric");
        // Classes print in the partition's canonical order; members print in
        // magnitude-first order so `z` precedes `z^-1` precedes `z^2`.
        let class_display: Vec<Vec<String>> = classes
            .classes
            .iter()
            .map(|c| sorted_display(lambda_spec, c.iter().cloned(), true))
            .collect();
        let report = decompose(algebra).expect("support is symmetric");
        let deco = DecompositionSummary {
            u_dimension: report.u_complement.dim(),
            u_basis: report
                .u_complement
                .spanning_vectors()
                .iter()
                .map(|v| algebra.format_vector(v))
                .collect(),
            ideals: report
                .ideals
                .iter()
                .map(|ideal| IdealSummary {
                    class_rep: lambda_spec.format_multiplicative(&ideal.class_rep),
                    class: sorted_display(lambda_spec, ideal.class.iter().cloned(), true),
                    one_dimension: ideal.one_part.dim(),
                    vee_dimension: ideal.vee_part.dim(),
                    total_dimension: ideal.total.dim(),
                    is_subalgebra: crate::decomposition::is_subalgebra(algebra, &ideal.total),
                    is_graded_ideal: crate::decomposition::is_graded_ideal(algebra, &ideal.total),
                })
                .collect(),
            orthogonality: report.orthogonality.clone(),
            covers: report.covers,
            is_direct: report.is_direct,
            center_dimension: report.center_dim,
            identity_part_generated: report.p1_condition,
        };
        let verdict = simplicity_verdict(algebra, options.seed);
        if !verdict.oracle.exact {
            notes.push(format!(
                "oracle sampled 50 homogeneous vectors per wide component with seed {}; its verdict is not exact",
                options.seed
            ));
        }
        let simp = simplicity_summary(algebra, &verdict, options);
        (Some(class_display), Some(deco), Some(simp))
    } else {
        notes.push(
            "support is not symmetric: connection classes, decomposition and the simplicity criterion are unavailable"
                .to_string(),
        );
        (None, None, None)
    };

    AnalysisReport {
        name: algebra.name().to_string(),
        dimension: algebra.dim(),
        scalar_order: algebra.scalar_order(),
        bicharacter: BiCharacterSummary {
            valid: validation.is_valid(),
            failures: validation.failures,
        },
        axioms: axiom_summary(algebra),
        support,
        classes,
        witness: None,
        decomposition,
        simplicity,
        notes,
    }
}

/// Resolve a witness query (display syntax for both endpoints) and summarize
/// the chain.
pub fn witness_summary(
    algebra: &PoissonColorAlgebra,
    supports: &SupportData,
    from: &GroupElement,
    to: &GroupElement,
) -> Result<WitnessSummary, ConnectionError> {
    let spec = algebra.lambda_spec();
    let found: Option<WitnessChain> = is_connected(supports, from, to)?;
    Ok(match found {
        Some(chain) => WitnessSummary {
            from: spec.format_multiplicative(from),
            to: spec.format_multiplicative(to),
            connected: true,
            factors: chain
                .factors
                .iter()
                .map(|f| spec.format_multiplicative(f))
                .collect(),
            partial_products: chain
                .running_products(spec)
                .iter()
                .map(|p| spec.format_multiplicative(p))
                .collect(),
        },
        None => WitnessSummary {
            from: spec.format_multiplicative(from),
            to: spec.format_multiplicative(to),
            connected: false,
            factors: vec![],
            partial_products: vec![],
        },
    })
}

/// Serialize a report: pretty JSON or an indented text rendering. Both are
/// deterministic functions of the report.
pub fn emit_report(report: &AnalysisReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let mut text =
                serde_json::to_string_pretty(report).expect("report serialization cannot fail");
            text.push('\n');
            text
        }
        ReportFormat::Text => emit_text(report),
    }
}

fn emit_text(report: &AnalysisReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "algebra {} (dimension {}, scalar order {})",
        report.name, report.dimension, report.scalar_order
    );
    let _ = writeln!(
        out,
        "bi-character: {}",
        if report.bicharacter.valid { "valid" } else { "INVALID" }
    );
    for f in &report.bicharacter.failures {
        let _ = writeln!(out, "  failure: {f}");
    }
    let _ = writeln!(
        out,
        "axioms: {}",
        if report.axioms.all_pass { "all pass" } else { "FAILURES" }
    );
    for c in &report.axioms.checks {
        let _ = writeln!(out, "  {}: {}", c.axiom, c.status);
        for ce in &c.counterexamples {
            let _ = writeln!(
                out,
                "    at ({}): {} != {}",
                ce.basis.join(", "),
                ce.lhs,
                ce.rhs
            );
        }
        if c.truncated {
            let _ = writeln!(out, "    (more counterexamples omitted)");
        }
    }
    let _ = writeln!(
        out,
        "support: sigma_lambda = {{{}}}, sigma_g = {{{}}}, symmetric = {}",
        report.support.sigma_lambda.join(", "),
        report.support.sigma_g.join(", "),
        report.support.symmetric
    );
    if let Some(classes) = &report.classes {
        let _ = writeln!(out, "connection classes ({}):", classes.len());
        for c in classes {
            let _ = writeln!(out, "  [{}]", c.join(", "));
        }
    }
    if let Some(w) = &report.witness {
        if w.connected {
            let _ = writeln!(
                out,
                "witness {} ~ {}: factors [{}], products {}",
                w.from,
                w.to,
                w.factors.join(", "),
                w.partial_products.join(" -> ")
            );
        } else {
            let _ = writeln!(out, "witness {} ~ {}: not connected", w.from, w.to);
        }
    }
    if let Some(d) = &report.decomposition {
        let _ = writeln!(
            out,
            "decomposition: U dimension {}, {} ideal(s), covers = {}, direct = {}, center dimension {}, identity part generated = {}",
            d.u_dimension,
            d.ideals.len(),
            d.covers,
            d.is_direct,
            d.center_dimension,
            d.identity_part_generated
        );
        for b in &d.u_basis {
            let _ = writeln!(out, "  U basis: {b}");
        }
        for i in &d.ideals {
            let _ = writeln!(
                out,
                "  ideal [{}] = {{{}}}: one-part {}, slice {}, total {}; subalgebra = {}, graded ideal = {}",
                i.class_rep,
                i.class.join(", "),
                i.one_dimension,
                i.vee_dimension,
                i.total_dimension,
                i.is_subalgebra,
                i.is_graded_ideal
            );
        }
        let all_orth = d
            .orthogonality
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, &v)| i == j || v));
        let _ = writeln!(out, "  orthogonality of distinct ideals: {all_orth}");
    }
    if let Some(s) = &report.simplicity {
        let _ = writeln!(
            out,
            "simplicity: applicable = {} (symmetric = {}, maximal length = {}, multiplicative = {})",
            s.applicable, s.symmetric_support, s.maximal_length, s.multiplicative
        );
        for f in &s.multiplicativity_failures {
            let _ = writeln!(out, "  multiplicativity failure at {f}");
        }
        if let Some(c) = &s.criterion {
            let _ = writeln!(
                out,
                "  criterion: simple = {} (center zero = {}, identity part generated = {}, single class = {})",
                c.simple, c.center_zero, c.identity_part_generated, c.single_class
            );
        }
        let _ = writeln!(
            out,
            "  oracle: simple = {} (exact = {})",
            s.oracle.simple, s.oracle.exact
        );
        if let Some(a) = s.agreement {
            let _ = writeln!(out, "  agreement: {a}");
        }
        if let Some(ideals) = &s.ideal_verdicts {
            let _ = writeln!(out, "  graded-simple blocks:");
            for v in ideals {
                let criterion = v
                    .criterion_simple
                    .map(|b| b.to_string())
                    .unwrap_or_else(|| "-".to_string());
                let _ = writeln!(
                    out,
                    "    [{}] dimension {}: criterion = {}, oracle = {} (exact = {})",
                    v.class_rep, v.dimension, criterion, v.oracle_simple, v.oracle_exact
                );
            }
        }
    }
    let _ = writeln!(out, "notes:");
    for n in &report.notes {
        let _ = writeln!(out, "  - {n}");
    }
    out
}
