//! Library side of the `hopfian` binary: argument types, output schema and
//! dispatch. [`run`] never prints; it returns the text and the exit status.

pub mod args;
pub mod schema;

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use hopfian::endo::{jacobian, jacobian_inverse_bounded_degree, parse_endo_file, JacobianInverse};
use hopfian::freealg::{parse_poly, GeneratorSet, NcPoly};
use hopfian::growth::{
    self, bounded_factor_complexity, build_u, commutative_quotient_growth, factor_complexity, gk_dim_estimate,
    growth_rate_le, to_ascii, GrowthError, GrowthSeries, MonomialQuotientSpec, RecurrentWordSpec, Y,
};
use hopfian::hopf::{
    certify_automorphism, demonstrate_kernel_separation_with, growth_hypothesis_check, AutomorphismOutcome,
    GrowthClassification,
};
use hopfian::pitest::{
    is_matrix_identity, randomized_identity_test, standard_polynomial, Budget, IdentityVerdict, PiError,
    SeparationConfig,
};
use hopfian::rational::{self, Rational};
use hopfian::RatMatrix;
use serde::Serialize;

use args::{Cli, Command, DemoCommand, EndoCommand, PolyArgs, RunArgs, SeriesArgs, WordSpecArgs};
use schema::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Success = 0,
    Negative = 1,
    Usage = 2,
    Budget = 3,
}

#[derive(Debug)]
pub struct Outcome {
    pub status: Status,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Budget(String),
    Negative(String),
}

type Res = Result<(Status, String), Failure>;

impl From<GrowthError> for Failure {
    fn from(e: GrowthError) -> Self {
        match e {
            GrowthError::WordTooLong { .. } => Failure::Budget(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<PiError> for Failure {
    fn from(e: PiError) -> Self {
        match e {
            PiError::BudgetExceeded(_) => Failure::Budget(e.to_string()),
            PiError::ZeroPolynomial | PiError::LadderBoundExceeded { .. } => Failure::Negative(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let res = match &cli.command {
        Command::Word(a) => word(&cli.run, &a.spec),
        Command::Complexity(a) => complexity(&cli.run, a),
        Command::Growth(a) => growth_cmd(&cli.run, a),
        Command::Gk(a) => gk(&cli.run, a),
        Command::CompareGrowth(a) => compare(&cli.run, a),
        Command::PiTest(a) => pi_test(&cli.run, a),
        Command::Witness(a) => witness(&cli.run, a),
        Command::Endo(EndoCommand::Check(a)) => endo_check(&cli.run, a),
        Command::Endo(EndoCommand::Jacobian(a)) => endo_jacobian(&cli.run, a),
        Command::Demo(DemoCommand::Separation(a)) => demo_separation(&cli.run, a),
        Command::Demo(DemoCommand::GrowthLemma(a)) => demo_growth(&cli.run, a),
    };
    match res {
        Ok((status, stdout)) => Outcome { status, stdout, stderr: String::new() },
        Err(Failure::Usage(m)) => {
            Outcome { status: Status::Usage, stdout: String::new(), stderr: format!("error: {m}\n") }
        }
        Err(Failure::Budget(m)) => {
            Outcome { status: Status::Budget, stdout: String::new(), stderr: format!("budget exhausted: {m}\n") }
        }
        Err(Failure::Negative(m)) => {
            Outcome { status: Status::Negative, stdout: String::new(), stderr: format!("{m}\n") }
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("records serialize");
    s.push('\n');
    s
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn spec_of(a: &WordSpecArgs) -> Result<RecurrentWordSpec, Failure> {
    Ok(RecurrentWordSpec::new(a.base, a.depth)?)
}

fn word_of(run: &RunArgs, spec: &RecurrentWordSpec) -> Result<Vec<u8>, Failure> {
    Ok(build_u(spec, run.max_word_len as u128)?)
}

fn word(run: &RunArgs, a: &WordSpecArgs) -> Res {
    let spec = spec_of(a)?;
    let w = word_of(run, &spec)?;
    let text = to_ascii(&w);
    let out = if run.json {
        to_json(&WordRecord { base: spec.base, depth: spec.depth, length: w.len() as u64, word: text })
    } else {
        text + "\n"
    };
    Ok((Status::Success, out))
}

fn complexity(run: &RunArgs, a: &args::ComplexityArgs) -> Res {
    let (source, w) = match &a.input {
        Some(text) => ("input".to_string(), growth::from_ascii(text)?),
        None => {
            let spec = spec_of(&a.spec)?;
            (format!("u_{} (base {})", spec.depth, spec.base), word_of(run, &spec)?)
        }
    };
    let max_n = a.max_n.unwrap_or(w.len().min(500));
    let c = match a.y_bound {
        Some(b) => bounded_factor_complexity(&w, max_n, Y, b)?,
        None => factor_complexity(&w, max_n)?,
    };
    let out = if run.json {
        to_json(&ComplexityRecord { source, word_length: w.len(), y_bound: a.y_bound, complexity: c })
    } else {
        let mut s = if run.csv {
            "k,c_k\n".to_string()
        } else {
            format!("# factor complexity of {source}, length {}\n", w.len())
        };
        for (k, ck) in c.iter().enumerate() {
            let sep = if run.csv { "," } else { " " };
            writeln!(s, "{}{sep}{ck}", k + 1).unwrap();
        }
        s
    };
    Ok((Status::Success, out))
}

fn parse_exponents(text: &str, vars: usize) -> Result<Vec<u32>, Failure> {
    let e: Vec<u32> = text
        .split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| usage(format!("bad exponent list '{text}'"))))
        .collect::<Result<_, _>>()?;
    if e.len() != vars {
        return Err(usage(format!("forbidden monomial '{text}' needs {vars} exponents")));
    }
    Ok(e)
}

fn closed_form(name: &str, max_n: usize) -> Option<GrowthSeries> {
    match name {
        "linear" => Some(GrowthSeries::linear(max_n)),
        "quadratic" => Some(GrowthSeries::quadratic(max_n)),
        "free" => Some(GrowthSeries::free_two(max_n)),
        _ => None,
    }
}

/// The series and, for recurrent words, whether `max_n` is within the stability guard.
fn series_of(run: &RunArgs, a: &SeriesArgs) -> Result<(GrowthSeries, Option<bool>), Failure> {
    if let Some(name) = &a.closed_form {
        let s = closed_form(name, a.max_n)
            .ok_or_else(|| usage(format!("unknown closed form '{name}' (linear, quadratic, free)")))?;
        return Ok((s, None));
    }
    if let Some(path) = &a.file {
        let s = GrowthSeries::from_csv(path.display().to_string(), &read_file(path)?)?;
        return Ok((s, None));
    }
    if let Some(vars) = a.commutative {
        let forbidden = a.forbidden.iter().map(|f| parse_exponents(f, vars)).collect::<Result<_, _>>()?;
        let spec = MonomialQuotientSpec::new(vars, forbidden)?;
        return Ok((commutative_quotient_growth(&spec, a.max_n), None));
    }
    let spec = spec_of(&a.spec)?;
    let w = word_of(run, &spec)?;
    let c = match a.y_bound {
        Some(b) => bounded_factor_complexity(&w, a.max_n, Y, b)?,
        None => factor_complexity(&w, a.max_n)?,
    };
    let what = match a.y_bound {
        Some(b) => format!("quotient with at most {b} y per word"),
        None => "factor algebra".to_string(),
    };
    let label = format!("{what} of u_{} (base {})", spec.depth, spec.base);
    let s = GrowthSeries::from_graded(label, c.into_iter().map(Into::into).collect());
    Ok((s, Some(growth::is_factor_stable(&spec, a.max_n))))
}

fn growth_cmd(run: &RunArgs, a: &SeriesArgs) -> Res {
    let (s, stable) = series_of(run, a)?;
    let out = if run.json {
        to_json(&SeriesRecord {
            label: s.label().to_string(),
            factor_stable: stable,
            d: s.dims().iter().map(ToString::to_string).collect(),
            c: s.graded().iter().map(ToString::to_string).collect(),
        })
    } else if run.csv {
        s.to_csv()
    } else {
        let mut out = format!("# {}\n", s.label());
        if stable == Some(false) {
            out.push_str("# warning: max-n exceeds the factor stability guard of this depth\n");
        }
        out.push_str("n d_n c_n\n");
        for n in 1..=s.len() {
            writeln!(out, "{n} {} {}", s.d(n), s.c(n)).unwrap();
        }
        out
    };
    Ok((Status::Success, out))
}

fn parse_pair(text: &str) -> Result<(usize, usize), Failure> {
    let bad = || usage(format!("expected start,end but got '{text}'"));
    let (a, b) = text.split_once(',').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

fn gk(run: &RunArgs, a: &args::GkArgs) -> Res {
    let (s, _) = series_of(run, &a.series)?;
    let window = match &a.window {
        Some(w) => parse_pair(w)?,
        None => ((s.len() / 10).max(2), s.len()),
    };
    let e = gk_dim_estimate(&s, window)?;
    let out = if run.json {
        to_json(&GkOutput {
            label: s.label().to_string(),
            window: e.window,
            estimate: e.estimate,
            least_squares_slope: e.least_squares_slope,
            exact_degree: e.exact_degree,
            unbounded: e.unbounded,
            ratios: e.ratios.clone(),
        })
    } else if run.csv {
        let mut out = "n,ln_d_over_ln_n\n".to_string();
        for (n, r) in &e.ratios {
            writeln!(out, "{n},{r}").unwrap();
        }
        out
    } else {
        let mut out = format!("series: {}\nwindow: [{}, {}]\n", s.label(), window.0, window.1);
        if e.unbounded {
            out.push_str("estimate: unbounded (slope grows across the window)\n");
        } else {
            writeln!(out, "estimate: {}", e.estimate).unwrap();
        }
        writeln!(out, "least-squares slope: {}", e.least_squares_slope).unwrap();
        match e.exact_degree {
            Some(k) => writeln!(out, "exact polynomial fit: degree {k}").unwrap(),
            None => out.push_str("exact polynomial fit: none\n"),
        }
        if let Some((n, r)) = e.ratios.last() {
            writeln!(out, "ln d_n / ln n at n = {n}: {r}").unwrap();
        }
        out
    };
    Ok((Status::Success, out))
}

fn parse_list<T>(text: &str, parse: impl Fn(&str) -> Option<T>) -> Result<Vec<T>, Failure> {
    text.split(',').map(|t| parse(t.trim()).ok_or_else(|| usage(format!("bad list entry '{t}' in '{text}'")))).collect()
}

fn compare(run: &RunArgs, a: &args::CompareArgs) -> Res {
    let load = |name: &str| -> Result<GrowthSeries, Failure> {
        match closed_form(name, a.max_n) {
            Some(s) => Ok(s),
            None => Ok(GrowthSeries::from_csv(name, &read_file(Path::new(name))?)?),
        }
    };
    let (sa, sb) = (load(&a.a)?, load(&a.b)?);
    let cs: Vec<Rational> = parse_list(&a.c_grid, rational::parse)?;
    let ks: Vec<usize> = parse_list(&a.k_grid, |t| t.parse().ok())?;
    let results = growth_rate_le(&sa, &sb, &cs, &ks)?;
    let records: Vec<DominanceRecord> = results.iter().map(Into::into).collect();
    let status = if results.iter().any(|d| d.holds()) { Status::Success } else { Status::Negative };
    let out = if run.json {
        to_json(&CompareRecord { a: sa.label().to_string(), b: sb.label().to_string(), results: records })
    } else {
        let mut out = if run.csv {
            "c,k,holds,tested_up_to,violations,first_violation,last_violation\n".to_string()
        } else {
            format!("# a_n <= c * b_(k n) with a = {}, b = {}\n", sa.label(), sb.label())
        };
        let opt = |v: Option<usize>| v.map_or("-".to_string(), |x| x.to_string());
        for r in &records {
            if run.csv {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    r.c,
                    r.k,
                    r.holds,
                    r.tested_up_to,
                    r.violations,
                    opt(r.first_violation),
                    opt(r.last_violation)
                )
                .unwrap();
            } else if r.holds {
                writeln!(out, "c = {}, k = {}: holds for n <= {}", r.c, r.k, r.tested_up_to).unwrap();
            } else {
                writeln!(
                    out,
                    "c = {}, k = {}: {} violations for n <= {}, first at n = {}, last at n = {}",
                    r.c,
                    r.k,
                    r.violations,
                    r.tested_up_to,
                    opt(r.first_violation),
                    opt(r.last_violation)
                )
                .unwrap();
            }
        }
        out
    };
    Ok((status, out))
}

/// `x, y, z` when the text only uses those, `x1..xk` when it uses indexed names.
fn infer_generators(text: &str) -> Result<GeneratorSet, Failure> {
    let mut idents = Vec::new();
    let mut cur = String::new();
    for ch in text.chars().chain(std::iter::once(' ')) {
        if ch.is_ascii_alphanumeric() || ch == '_' {
            cur.push(ch);
        } else if !cur.is_empty() {
            if !cur.chars().next().unwrap().is_ascii_digit() {
                idents.push(cur.clone());
            }
            cur.clear();
        }
    }
    let xyz = ["x", "y", "z"];
    if idents.iter().all(|i| xyz.contains(&i.as_str())) {
        let count = idents.iter().map(|i| xyz.iter().position(|x| x == i).unwrap() + 1).max().unwrap_or(1);
        return Ok(GeneratorSet::standard(count));
    }
    let indexed: Option<Vec<usize>> =
        idents.iter().map(|i| i.strip_prefix('x').and_then(|d| d.parse().ok()).filter(|&k| k >= 1)).collect();
    match indexed {
        Some(ks) => {
            let count = ks.into_iter().max().unwrap_or(1);
            if count > 3 {
                return Ok(GeneratorSet::standard(count));
            }
            let names: Vec<String> = (1..=count).map(|k| format!("x{k}")).collect();
            GeneratorSet::new(names.iter().map(String::as_str)).map_err(|e| usage(e.to_string()))
        }
        None => Err(usage("cannot infer generators; pass --generators")),
    }
}

fn poly_of(a: &PolyArgs) -> Result<NcPoly, Failure> {
    if let Some(k) = a.standard {
        if k == 0 {
            return Err(usage("--standard needs k >= 1"));
        }
        return Ok(standard_polynomial(k));
    }
    let text = a.poly.as_deref().expect("clap requires a polynomial or --standard");
    parse_with(text, a.generators.as_deref())
}

fn parse_with(text: &str, generators: Option<&str>) -> Result<NcPoly, Failure> {
    let gens = match generators {
        Some(g) => GeneratorSet::new(g.split(',').map(str::trim)).map_err(|e| usage(e.to_string()))?,
        None => infer_generators(text)?,
    };
    parse_poly(text, &gens).map_err(|e| usage(format!("{e} in '{text}'")))
}

fn budget_of(run: &RunArgs) -> Budget {
    Budget { max_n: run.budget_n as usize, max_degree: run.budget_degree as usize }
}

fn matrices(ms: &[RatMatrix]) -> Vec<MatrixStrings> {
    ms.iter().map(RatMatrix::to_strings).collect()
}

fn pi_test(run: &RunArgs, a: &args::PiTestArgs) -> Res {
    let f = poly_of(&a.poly)?;
    let mut rec = PiTestRecord {
        polynomial: f.to_string(),
        generators: f.gens().names().to_vec(),
        n: a.n,
        mode: String::new(),
        verdict: String::new(),
        seed: run.seed,
        modulus: a.modulus,
        trials: None,
        sample_size: None,
        per_trial_bound: None,
        error_bound: None,
        witness: None,
        value: None,
    };
    let identity = if a.exact {
        budget_of(run).check(&f, a.n)?;
        rec.mode = "exact".into();
        let holds = is_matrix_identity(&f, a.n)?;
        rec.verdict = if holds { "identity" } else { "nonidentity" }.into();
        holds
    } else {
        rec.mode = "randomized".into();
        rec.trials = Some(a.trials);
        match randomized_identity_test(&f, a.n, a.trials, run.seed, a.modulus)? {
            IdentityVerdict::NonIdentity { witness, value, .. } => {
                rec.verdict = "nonidentity".into();
                rec.witness = Some(matrices(&witness));
                rec.value = Some(value.to_strings());
                false
            }
            IdentityVerdict::ProbableIdentity { sample_size, per_trial_bound, error_bound, .. } => {
                rec.verdict = "probable_identity".into();
                rec.sample_size = Some(sample_size);
                rec.per_trial_bound = Some(rational::to_string(&per_trial_bound));
                rec.error_bound = Some(error_bound);
                true
            }
        }
    };
    let status = if identity { Status::Success } else { Status::Negative };
    let out = if run.json {
        to_json(&rec)
    } else {
        let mut out = format!("f = {}\nn = {}\n", rec.polynomial, rec.n);
        match rec.verdict.as_str() {
            "identity" => out.push_str("identity: generic matrices give zero\n"),
            "probable_identity" => writeln!(
                out,
                "probable identity: {} trials vanished, |S| = {}, per-trial bound {}, combined bound {:e}",
                a.trials,
                rec.sample_size.unwrap(),
                rec.per_trial_bound.as_deref().unwrap(),
                rec.error_bound.unwrap()
            )
            .unwrap(),
            _ => {
                out.push_str("not an identity\n");
                if let (Some(w), Some(v)) = (&rec.witness, &rec.value) {
                    write_matrices(&mut out, &f, w, v);
                }
            }
        }
        out
    };
    Ok((status, out))
}

fn write_matrices(out: &mut String, f: &NcPoly, ms: &[MatrixStrings], value: &MatrixStrings) {
    for (i, m) in ms.iter().enumerate() {
        writeln!(out, "{} = {}", f.gens().name(i), format_matrix(m)).unwrap();
    }
    writeln!(out, "f = {}", format_matrix(value)).unwrap();
}

fn format_matrix(m: &MatrixStrings) -> String {
    let rows: Vec<String> = m.iter().map(|r| format!("[{}]", r.join(", "))).collect();
    format!("[{}]", rows.join(", "))
}

fn separation_config(run: &RunArgs) -> SeparationConfig {
    SeparationConfig { seed: run.seed, budget: Some(budget_of(run)), ..SeparationConfig::default() }
}

fn witness(run: &RunArgs, a: &PolyArgs) -> Res {
    let f = poly_of(a)?;
    let report = demonstrate_kernel_separation_with(&f, &separation_config(run))?;
    let rec = report.to_record();
    let out = if run.json {
        to_json(&rec)
    } else {
        let mut out = format!(
            "f = {}\ndegree = {}\nn = {}\nmethod = {}\n",
            rec.polynomial,
            rec.degree,
            rec.n,
            method_name(&rec.method)
        );
        write_matrices(&mut out, &f, &rec.matrices, &rec.value);
        out
    };
    Ok((Status::Success, out))
}

/// The JSON spelling, so text and JSON agree.
fn method_name(m: &hopfian::pitest::WitnessMethod) -> String {
    serde_json::to_value(m).ok().and_then(|v| v.as_str().map(str::to_owned)).unwrap_or_default()
}

fn endo_check(run: &RunArgs, a: &args::EndoArgs) -> Res {
    let phi = parse_endo_file(&read_file(&a.file)?).map_err(|e| usage(format!("{}: {e}", a.file.display())))?;
    let outcome = certify_automorphism(&phi, a.degree_bound).map_err(|e| usage(e.to_string()))?;
    let rec = outcome.to_record(&phi, a.degree_bound).map_err(|e| usage(e.to_string()))?;
    let status = if matches!(outcome, AutomorphismOutcome::Certified(_)) { Status::Success } else { Status::Negative };
    let out = if run.json {
        to_json(&rec)
    } else {
        let mut out = String::new();
        match &outcome {
            AutomorphismOutcome::Certified(c) => {
                out.push_str("automorphism\ninverse:\n");
                for (i, img) in c.inverse.images().iter().enumerate() {
                    writeln!(out, "  {} -> {img}", phi.gens().name(i)).unwrap();
                }
                writeln!(out, "abelianized Jacobian determinant: {}", rec.jacobian_det.as_deref().unwrap()).unwrap();
                match c.jacobian_inverse(&phi).map_err(|e| usage(e.to_string()))? {
                    Some(b) => writeln!(out, "Jacobian inverse:\n{b}").unwrap(),
                    None => writeln!(out, "Jacobian of the inverse does not invert J(phi)").unwrap(),
                }
            }
            AutomorphismOutcome::Unknown { bound } => writeln!(out, "unknown at bound {bound}").unwrap(),
            AutomorphismOutcome::NotSurjective(_) => {
                writeln!(out, "not surjective: {}", rec.obstruction.as_deref().unwrap()).unwrap()
            }
        }
        out
    };
    Ok((status, out))
}

fn endo_jacobian(run: &RunArgs, a: &args::JacobianArgs) -> Res {
    let phi = parse_endo_file(&read_file(&a.file)?).map_err(|e| usage(format!("{}: {e}", a.file.display())))?;
    let j = jacobian(&phi);
    let mut rec = JacobianRecord {
        generators: phi.gens().names().to_vec(),
        images: phi.images().iter().map(ToString::to_string).collect(),
        jacobian: j.to_strings(),
        degree_bound: a.degree_bound,
        inverse_outcome: None,
        inverse: None,
    };
    let mut status = Status::Success;
    if let Some(d) = a.degree_bound {
        let (name, inv) = match jacobian_inverse_bounded_degree(&j, d) {
            JacobianInverse::TwoSided(b) => ("two_sided", Some(b)),
            JacobianInverse::RightOnly(b) => ("right_only", Some(b)),
            JacobianInverse::LeftOnly(b) => ("left_only", Some(b)),
            JacobianInverse::ConstantTermSingular => ("constant_term_singular", None),
            JacobianInverse::NoneWithinBound { .. } => ("none_within_bound", None),
        };
        if name != "two_sided" {
            status = Status::Negative;
        }
        rec.inverse_outcome = Some(name.to_string());
        rec.inverse = inv.map(|b| b.to_strings());
    }
    let out = if run.json {
        to_json(&rec)
    } else {
        let mut out = format!("Jacobian:\n{j}\n");
        if let (Some(d), Some(name)) = (a.degree_bound, &rec.inverse_outcome) {
            writeln!(out, "inverse search up to degree {d}: {name}").unwrap();
            if let Some(b) = &rec.inverse {
                writeln!(out, "{}", format_matrix(b)).unwrap();
            }
        }
        out
    };
    Ok((status, out))
}

fn demo_separation(run: &RunArgs, a: &args::DemoSeparationArgs) -> Res {
    let polys: Vec<NcPoly> = if a.polys.is_empty() {
        vec![parse_with("x*y - y*x", None)?, parse_with("x + y", None)?, standard_polynomial(4)]
    } else {
        a.polys.iter().map(|p| parse_with(p, a.generators.as_deref())).collect::<Result<_, _>>()?
    };
    let config = separation_config(run);
    let mut reports = Vec::with_capacity(polys.len());
    for f in &polys {
        reports.push(demonstrate_kernel_separation_with(f, &config)?.to_record());
    }
    let out = if run.json {
        to_json(&SeparationDemoRecord { reports })
    } else {
        let mut out = String::new();
        for (f, r) in polys.iter().zip(&reports) {
            writeln!(out, "== {} ==\n{}", r.polynomial, r.statement).unwrap();
            write_matrices(&mut out, f, &r.matrices, &r.value);
            writeln!(out, "{}\n", r.narrative).unwrap();
        }
        out
    };
    Ok((Status::Success, out))
}

fn demo_growth(run: &RunArgs, a: &args::GrowthLemmaArgs) -> Res {
    let (algebra, quotient) = if a.baseline {
        let plane = MonomialQuotientSpec::new(2, vec![])?;
        let cut = MonomialQuotientSpec::new(2, vec![vec![0, 2]])?;
        (
            commutative_quotient_growth(&plane, a.max_n).with_label("F[x,y]"),
            commutative_quotient_growth(&cut, a.max_n).with_label("F[x,y]/(y^2)"),
        )
    } else {
        let spec = spec_of(&a.spec)?;
        let w = word_of(run, &spec)?;
        let full = factor_complexity(&w, a.max_n)?;
        let cut = bounded_factor_complexity(&w, a.max_n, Y, a.y_bound)?;
        (
            GrowthSeries::from_graded(
                format!("factor algebra of u_{} (base {})", spec.depth, spec.base),
                full.into_iter().map(Into::into).collect(),
            ),
            GrowthSeries::from_graded(
                format!("quotient with at most {} y per word", a.y_bound),
                cut.into_iter().map(Into::into).collect(),
            ),
        )
    };
    let report = growth_hypothesis_check(&algebra, &quotient)?;
    let rec = report.to_record();
    let status = if matches!(report.classification, GrowthClassification::QuotientStrictlySmaller { .. }) {
        Status::Success
    } else {
        Status::Negative
    };
    let out = if run.json {
        to_json(&rec)
    } else {
        let mut out = format!(
            "{}\nalgebra: {}\nquotient: {}\nrange: n <= {}\n",
            rec.statement, rec.algebra_label, rec.quotient_label, rec.range
        );
        match rec.first_strict {
            Some(n) => writeln!(out, "classification: {} (strict from n = {n})", rec.classification).unwrap(),
            None => writeln!(out, "classification: {}", rec.classification).unwrap(),
        }
        if let (Some(ga), Some(gq)) = (&rec.gk_algebra, &rec.gk_quotient) {
            writeln!(
                out,
                "growth degree estimates on [{}, {}]: algebra {} (slope {}), quotient {} (slope {})",
                ga.window.0, ga.window.1, ga.estimate, ga.least_squares_slope, gq.estimate, gq.least_squares_slope
            )
            .unwrap();
        }
        out.push_str("finite-range evidence only\n");
        out
    };
    Ok((status, out))
}
