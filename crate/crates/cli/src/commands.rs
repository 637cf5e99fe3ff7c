//! One function per subcommand: build the report and a plain-text summary.

use std::fmt::Write as _;

use gradealg::blowup::{
    assoc_graded_presentation, bigraded_hilbert_g, lemma1_membership_check, presentation_hilbert,
    rees_presentation,
};
use gradealg::criterion::{theorem_main_decide, variable_subset_basis, DecideOptions};
use gradealg::hilbert::hilbert_function;
use gradealg::hochster::{sr_invariants, window_from_contributions, IndexWindow};
use gradealg::krull_dim;
use gradealg::rees_cohomology::{cm_rees, dim_rees, gencm_decide, rees_window, GenCMCase, SplitSRData};

use crate::report::*;
use crate::spec::Problem;
use crate::CliError;

/// Exit code for a negative decision.
pub const NEGATIVE: i32 = 3;

pub struct Outcome {
    pub text: String,
    pub json: String,
    pub exit: i32,
}

fn b_set(p: &Problem) -> Result<Vec<usize>, CliError> {
    variable_subset_basis(&p.session, &p.i_gens, &p.j)?
        .ok_or_else(|| CliError::Input("I is not generated by variables modulo J".into()))
}

fn split_data(p: &Problem) -> Result<(Vec<usize>, SplitSRData), CliError> {
    let b = b_set(p)?;
    let delta = p.complex()?;
    let data = SplitSRData::new(&delta, &b, p.field(), p.session.config().exec)?;
    Ok((b, data))
}

pub fn check_iso(p: &Problem) -> Result<Outcome, CliError> {
    let d = theorem_main_decide(&p.session, &p.j, &p.i_gens, DecideOptions { allow_linear: p.allow_linear })?;
    let report = CheckIsoReport {
        header: Header::new("check-iso", p),
        isomorphic: d.isomorphic,
        reason: d.failure_reason,
        b: d.b.as_ref().map(|b| p.variable_names(b)),
        verified: d.verified,
        witness: d
            .witness
            .as_ref()
            .map(|w| Witness { jb: w.jb.canonical_strings(), jc: w.jc.canonical_strings() }),
        warnings: d.warnings.clone(),
    };
    let mut text = String::new();
    for w in &report.warnings {
        writeln!(text, "warning: {w}").unwrap();
    }
    if d.isomorphic {
        let w = report.witness.as_ref().expect("witness");
        writeln!(text, "isomorphic: true (verified: {})", d.verified).unwrap();
        writeln!(text, "B = {{{}}}", report.b.as_ref().unwrap().join(", ")).unwrap();
        writeln!(text, "J_B = ({})", w.jb.join(", ")).unwrap();
        writeln!(text, "J_C = ({})", w.jc.join(", ")).unwrap();
    } else {
        let reason = serde_json::to_value(d.failure_reason).unwrap();
        writeln!(text, "isomorphic: false ({})", reason.as_str().unwrap_or("")).unwrap();
    }
    Ok(Outcome { text, json: emit(&report)?, exit: if d.isomorphic && d.verified { 0 } else { NEGATIVE } })
}

pub fn presentation(p: &Problem) -> Result<Outcome, CliError> {
    let rees = rees_presentation(&p.session, &p.j, &p.i_gens)?;
    let g = assoc_graded_presentation(&p.session, &p.j, &p.i_gens)?;
    let mut passed = 0;
    for gen in g.defining_ideal.generators() {
        if lemma1_membership_check(&p.session, gen, &p.j, &p.i_gens)? {
            passed += 1;
        }
    }
    let report = PresentationReport {
        header: Header::new("presentation", p),
        rees: PresentationJson::from(&rees),
        assoc_graded: PresentationJson::from(&g),
        lemma_check: LemmaCheck { generators: g.defining_ideal.generators().len(), passed },
    };
    let mut text = String::new();
    let show = |text: &mut String, title: &str, pj: &PresentationJson| {
        let vars: Vec<String> =
            pj.variables.iter().map(|v| format!("{}:({},{})", v.name, v.degree, v.level)).collect();
        writeln!(text, "{title} in k[{}]", vars.join(", ")).unwrap();
        for g in &pj.ideal {
            writeln!(text, "  {g}").unwrap();
        }
    };
    show(&mut text, "Rees algebra", &report.rees);
    show(&mut text, "Associated graded ring", &report.assoc_graded);
    writeln!(text, "membership check: {}/{} generators pass", passed, report.lemma_check.generators).unwrap();
    let exit = if passed == report.lemma_check.generators { 0 } else { NEGATIVE };
    Ok(Outcome { text, json: emit(&report)?, exit })
}

pub fn hilbert(p: &Problem) -> Result<Outcome, CliError> {
    let cfg = *p.session.config();
    let a = hilbert_function(&p.j, cfg.degree)?.dims;
    let g = bigraded_hilbert_g(&p.session, &p.j, &p.i_gens, cfg.levels, cfg.degree)?;
    let pres = assoc_graded_presentation(&p.session, &p.j, &p.i_gens)?;
    let from_pres = presentation_hilbert(&p.session, &pres, cfg.levels, cfg.degree);
    let top = cfg.levels.min(cfg.degree) as usize;
    let telescoping = (0..=top).all(|d| g.dims.iter().map(|row| row[d]).sum::<u64>() == a[d]);
    let report = HilbertReport {
        header: Header::new("hilbert", p),
        levels: cfg.levels,
        degree: cfg.degree,
        a: a.clone(),
        g: g.dims.clone(),
        telescoping,
        presentation_agrees: from_pres.dims == g.dims,
    };
    let mut text = String::new();
    writeln!(text, "dim A_d, d = 0..{}: {:?}", cfg.degree, a).unwrap();
    writeln!(text, "dim (I^n/I^(n+1))_d:").unwrap();
    for (n, row) in g.dims.iter().enumerate() {
        writeln!(text, "  n = {n}: {row:?}").unwrap();
    }
    writeln!(text, "telescoping: {telescoping}").unwrap();
    writeln!(text, "presentation agrees: {}", report.presentation_agrees).unwrap();
    let exit = if report.telescoping && report.presentation_agrees { 0 } else { NEGATIVE };
    Ok(Outcome { text, json: emit(&report)?, exit })
}

fn table(text: &mut String, name: &str, windows: &[IndexWindow]) {
    for w in windows {
        let dims: Vec<String> = w.dims.iter().map(|(j, d)| format!("{j}:{d}")).collect();
        let flags = if w.is_zero {
            "zero".to_string()
        } else if w.finite_length {
            "finite length".to_string()
        } else {
            "infinite length".to_string()
        };
        writeln!(text, "H^{}({name}) [{flags}] {}", w.index, dims.join(" ")).unwrap();
    }
}

pub fn cohomology(p: &Problem, module: &str) -> Result<Outcome, CliError> {
    let (lo, hi) = p.window();
    let mut text = String::new();
    let report = match module {
        "A" => {
            let delta = p.complex()?;
            let c = gradealg::hochster::hochster_contributions(&delta, p.field(), p.session.config().exec);
            let w = window_from_contributions(&c, lo, hi)?;
            let inv = gradealg::hochster::sr_invariants_from(&c, p.field());
            table(&mut text, "A", &w.indices);
            writeln!(
                text,
                "dim A = {}, depth A = {}, a(A) = {}, cm = {}, gencm = {}",
                inv.dim,
                inv.depth,
                inv.a_invariant.map_or("-inf".into(), |a| a.to_string()),
                inv.cm,
                inv.gencm
            )
            .unwrap();
            CohomologyReport {
                header: Header::new("cohomology", p),
                module: "A".into(),
                window: (lo, hi),
                cohomology: w.indices,
                invariants: Some(inv),
                rees: None,
            }
        }
        "R" => {
            let (b, data) = split_data(p)?;
            let w = rees_window(&data, lo, hi)?;
            table(&mut text, "R", &w.indices);
            let summary = ReesSummary {
                b: p.variable_names(&b),
                dim_r: dim_rees(&data.delta, &b),
                cm_r: cm_rees(&data),
            };
            writeln!(text, "dim R = {}, cm R = {}", summary.dim_r, summary.cm_r).unwrap();
            CohomologyReport {
                header: Header::new("cohomology", p),
                module: "R".into(),
                window: (lo, hi),
                cohomology: w.indices,
                invariants: None,
                rees: Some(summary),
            }
        }
        other => return Err(CliError::Input(format!("unknown module `{other}`, use A or R"))),
    };
    Ok(Outcome { text, json: emit(&report)?, exit: 0 })
}

pub fn gencm(p: &Problem) -> Result<Outcome, CliError> {
    let (lo, hi) = p.window();
    let (b, data) = split_data(p)?;
    let verdict = gencm_decide(&data);
    let windows = GenCMWindows {
        window: (lo, hi),
        a1: data.window1(lo, hi)?.indices,
        a2: data.window2(lo, hi)?.indices,
        r: rees_window(&data, lo, hi)?.indices,
    };
    let case = serde_json::to_value(verdict.case).unwrap();
    let mut text = String::new();
    writeln!(text, "gencm: {} (case: {})", verdict.gencm, case.as_str().unwrap_or("")).unwrap();
    writeln!(text, "dim R = {}, cm R = {}", verdict.dim_r, verdict.cm_r).unwrap();
    writeln!(text, "A generalized Cohen-Macaulay: {} ({})", verdict.precondition_a_gencm, verdict.scope)
        .unwrap();
    let e = &verdict.evidence;
    writeln!(
        text,
        "evidence: I in all top primes {}, dim A2 = 0 {}, a(A1) < 0 {}, H^(d1-1)(A1)_(<=-2) = 0 {}, H^(d2-1)(A2) = 0 {}",
        e.i_in_all_top_primes, e.dim_a2_zero, e.a_a1_negative, e.h_d1_below_minus_one_zero, e.h_d2_zero
    )
    .unwrap();
    let c = &verdict.cohomology_check;
    writeln!(text, "from assembled cohomology: dim R = {}, cm = {}, gencm = {}", c.dim, c.cm, c.gencm)
        .unwrap();
    let exit = if verdict.gencm && verdict.case != GenCMCase::None { 0 } else { NEGATIVE };
    let report = GenCMReport { header: Header::new("gencm", p), b: p.variable_names(&b), verdict, windows };
    Ok(Outcome { text, json: emit(&report)?, exit })
}

pub fn dim(p: &Problem) -> Result<Outcome, CliError> {
    let delta = p.complex()?;
    let inv = sr_invariants(&delta, p.field());
    let b = variable_subset_basis(&p.session, &p.i_gens, &p.j)?;
    let (dim_r, method) = match &b {
        Some(b) => (dim_rees(&delta, b), "top-facets"),
        None => {
            let pres = rees_presentation(&p.session, &p.j, &p.i_gens)?;
            (krull_dim(&pres.defining_ideal)?, "rees-presentation")
        }
    };
    let report = DimReport {
        header: Header::new("dim", p),
        dim_a: inv.dim,
        dim_r,
        depth_a: inv.depth,
        a_invariant: inv.a_invariant,
        b: b.as_ref().map(|b| p.variable_names(b)),
        dim_r_method: method.into(),
    };
    let text = format!(
        "dim A = {}, dim R = {}, depth A = {}, a(A) = {}\n",
        report.dim_a,
        report.dim_r,
        report.depth_a,
        report.a_invariant.map_or("-inf".into(), |a| a.to_string())
    );
    Ok(Outcome { text, json: emit(&report)?, exit: 0 })
}
