//! Command-line front end: argument parsing, dispatch and report rendering.

use std::fs;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use macexp::multipoly::MultiPoly;
use macexp::operators::OperatorMatrix;
use macexp::rings::{BetaPoly, Coeff, Rational};
use macexp::tbinom::{
    scaled_t_binomial_jet, scaled_taylor_coeff_closed, t_binomial, t_binomial_jet, taylor_coeff_closed, Scaling,
};
use macexp::verify::{
    at_beta, jack_solve, noncommutativity_witness, run_suite, verify_identity, Context, Params, Scope, Status,
    Verdict, WitnessGrid, WitnessReport,
};
use macexp::Error;

#[derive(Parser, Debug)]
#[command(name = "macexp", version, about = "Exact checks of h-expansions of Macdonald operators")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check one identity or a named suite.
    Verify(VerifyArgs),
    /// Print the h^k coefficient of D_n^r as a matrix on the m-basis.
    Expand(ExpandArgs),
    /// Print a t-binomial, its jet and the closed Taylor coefficients.
    Tbinom(TbinomArgs),
    /// Print Jack polynomials at a rational beta.
    Jack(JackArgs),
    /// Search for non-commuting expansion orders.
    Witness(WitnessArgs),
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Basis window |lambda| <= degree.
    #[arg(long, default_value_t = 4)]
    degree: u32,
    /// Truncation order K of the h-expansion.
    #[arg(long = "jet-order", default_value_t = 4)]
    jet_order: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Write the report to a file instead of standard output.
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, conflicts_with = "identity", required_unless_present = "identity")]
    suite: Option<String>,
    #[arg(long)]
    identity: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    i: Option<usize>,
    #[arg(long)]
    j: Option<usize>,
    /// Fixed q for the Macdonald commutator (requires --t).
    #[arg(long, requires = "t", allow_hyphen_values = true)]
    q: Option<Rational>,
    #[arg(long, requires = "q", allow_hyphen_values = true)]
    t: Option<Rational>,
    /// Include wall-clock times in the report.
    #[arg(long)]
    timings: bool,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct ExpandArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    #[arg(long)]
    order: usize,
    /// Evaluate the entries at this beta.
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<Rational>,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct TbinomArgs {
    #[arg(long)]
    n: i64,
    #[arg(long)]
    r: i64,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct JackArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, allow_hyphen_values = true)]
    beta: Rational,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct WitnessArgs {
    #[arg(long = "n-max", default_value_t = 4)]
    n_max: usize,
    #[arg(long = "order-max", default_value_t = 4)]
    order_max: usize,
    /// Exit 1 unless the search outcome matches.
    #[arg(long, value_parser = ["found", "not-found"])]
    expect: Option<String>,
    #[command(flatten)]
    common: Common,
}

/// Runs the command line and returns the exit code: 0 when everything
/// passed, 1 on a failing verdict or unmet expectation, 2 on usage errors.
pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// [`run`] with explicit output streams.
pub fn run_with<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok((text, out_path, code)) => {
            let written = match out_path {
                Some(path) => fs::write(&path, &text).map_err(|e| format!("cannot write {path}: {e}")),
                None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
            };
            match written {
                Ok(()) => code,
                Err(msg) => {
                    let _ = writeln!(err, "error: {msg}");
                    2
                }
            }
        }
        Err(e) => {
            let _ = match &e {
                Error::Usage(msg) => writeln!(err, "error: {msg}"),
                _ => writeln!(err, "error: {e}"),
            };
            let _ = writeln!(err, "{}", usage());
            match e {
                Error::Usage(_) => 2,
                _ => 1,
            }
        }
    }
}

fn usage() -> String {
    use clap::CommandFactory;
    Cli::command().render_usage().to_string()
}

type Dispatched = (String, Option<String>, i32);

fn dispatch(cmd: Command) -> Result<Dispatched, Error> {
    match cmd {
        Command::Verify(a) => verify(a),
        Command::Expand(a) => expand(a),
        Command::Tbinom(a) => tbinom(a),
        Command::Jack(a) => jack(a),
        Command::Witness(a) => witness(a),
    }
}

fn check_common(c: &Common) -> Result<(), Error> {
    if c.degree == 0 {
        return Err(Error::Usage("--degree must be at least 1".into()));
    }
    Ok(())
}

fn check_range(name: &str, v: usize, n: usize) -> Result<(), Error> {
    if v == 0 || v > n {
        return Err(Error::Usage(format!("need 1 <= {name} <= n, got {name}={v}, n={n}")));
    }
    Ok(())
}

fn verify(a: VerifyArgs) -> Result<Dispatched, Error> {
    check_common(&a.common)?;
    if let Some(n) = a.n {
        for (name, v) in [("r", a.r), ("s", a.s)] {
            if let Some(v) = v {
                check_range(name, v, n)?;
            }
        }
    }
    if let Some(k) = a.k {
        if k > a.common.jet_order {
            return Err(Error::Usage(format!("--k {k} exceeds --jet-order {}", a.common.jet_order)));
        }
    }
    let params = Params {
        n: a.n,
        r: a.r,
        s: a.s,
        k: a.k,
        i: a.i,
        j: a.j,
        degree: a.common.degree,
        jet_order: a.common.jet_order,
        seed: a.common.seed,
        qt: a.q.zip(a.t),
    };
    let verdicts = match (&a.suite, &a.identity) {
        (Some(suite), _) => run_suite(suite, &params, Scope { n: a.n, r: a.r })?,
        (None, Some(id)) => vec![verify_identity(&mut Context::new(params.jet_order), id, &params)?],
        (None, None) => return Err(Error::Usage("give --suite or --identity".into())),
    };
    let code = if verdicts.iter().all(Verdict::passed) { 0 } else { 1 };
    Ok((emit_report(&verdicts, a.common.json, a.timings), a.common.out, code))
}

fn verdict_json(v: &Verdict, timings: bool) -> Value {
    let mut m = Map::new();
    m.insert("identity".into(), json!(v.identity));
    m.insert("params".into(), json!(v.params));
    m.insert("status".into(), json!(v.status.to_string()));
    m.insert(
        "residual".into(),
        match &v.residual {
            None => json!("zero"),
            Some(r) => json!({ "rendering": r }),
        },
    );
    if let Some(d) = &v.detail {
        m.insert("detail".into(), json!(d));
    }
    m.insert("basis_degree".into(), json!(v.basis_degree));
    m.insert("jet_order".into(), json!(v.jet_order));
    m.insert("seed".into(), json!(v.seed));
    m.insert("runtime_ms".into(), if timings { json!(v.runtime_ms) } else { Value::Null });
    Value::Object(m)
}

/// Renders verdicts as one line each (text) or as a JSON array. Without
/// `timings` the output depends only on the inputs.
pub fn emit_report(verdicts: &[Verdict], json_mode: bool, timings: bool) -> String {
    if json_mode {
        let arr: Vec<Value> = verdicts.iter().map(|v| verdict_json(v, timings)).collect();
        let mut s = serde_json::to_string_pretty(&arr).expect("JSON values serialize");
        s.push('\n');
        return s;
    }
    let mut s = String::new();
    for v in verdicts {
        let params: Vec<String> = v.params.iter().map(|(k, x)| format!("{k}={x}")).collect();
        let status = match v.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        s.push_str(&format!("{status} {} [{}] degree={}", v.identity, params.join(" "), v.basis_degree));
        if let Some(r) = &v.residual {
            s.push_str(&format!(" residual: {r}"));
        }
        if let Some(d) = &v.detail {
            s.push_str(&format!(" ({d})"));
        }
        if timings {
            s.push_str(&format!(" {}ms", v.runtime_ms));
        }
        s.push('\n');
    }
    s
}

fn matrix_rows<C: Coeff>(m: &OperatorMatrix<C>) -> Vec<String> {
    m.entries().iter().map(|row| format!("[{}]", row.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", "))).collect()
}

fn expand(a: ExpandArgs) -> Result<Dispatched, Error> {
    check_common(&a.common)?;
    check_range("r", a.r, a.n)?;
    if a.order > a.common.jet_order {
        return Err(Error::Usage(format!("--order {} exceeds --jet-order {}", a.order, a.common.jet_order)));
    }
    let mut ctx = Context::new(a.common.jet_order);
    let m = ctx.order(a.n, a.r, a.order, a.common.degree)?;
    let basis: Vec<String> = m.basis().iter().map(|p| format!("m{p}")).collect();
    let rows = match &a.beta {
        Some(b) => matrix_rows(&at_beta(&m, b)),
        None => matrix_rows(&m),
    };
    let text = if a.common.json {
        let v = json!({
            "n": a.n, "r": a.r, "order": a.order, "basis": basis,
            "beta": a.beta.as_ref().map(|b| b.to_string()),
            "rows": rows,
        });
        serde_json::to_string_pretty(&v).expect("JSON values serialize") + "\n"
    } else {
        format!("basis: {}\n{}\n", basis.join(", "), rows.join("\n"))
    };
    Ok((text, a.common.out, 0))
}

fn tbinom(a: TbinomArgs) -> Result<Dispatched, Error> {
    check_common(&a.common)?;
    if a.r < 0 || a.r > a.n {
        return Err(Error::Usage(format!("need 0 <= r <= n, got n={}, r={}", a.n, a.r)));
    }
    let k_max = a.common.jet_order.min(4);
    let poly = t_binomial(a.n, a.r)?;
    let jet = t_binomial_jet(a.n, a.r, k_max)?;
    let scaled = scaled_t_binomial_jet(a.n, a.r, k_max, Scaling::Half)?;
    let mut rows = Vec::new();
    for k in 0..=k_max as u32 {
        let closed = taylor_coeff_closed(a.n, a.r, k)?;
        let sclosed = scaled_taylor_coeff_closed(a.n, a.r, k)?;
        rows.push((k, jet.coeff(k as usize), closed, scaled.coeff(k as usize), sclosed));
    }
    let text = if a.common.json {
        let rows: Vec<Value> = rows
            .iter()
            .map(|(k, j, c, sj, sc)| {
                json!({"k": k, "jet": j.to_string(), "closed": c.to_string(),
                       "scaled_jet": sj.to_string(), "scaled_closed": sc.to_string()})
            })
            .collect();
        let v = json!({"n": a.n, "r": a.r, "t_binomial": poly.render("t"), "coefficients": rows});
        serde_json::to_string_pretty(&v).expect("JSON values serialize") + "\n"
    } else {
        let mut s = format!("[{} {}]_t = {}\n", a.n, a.r, poly.render("t"));
        for (k, j, c, sj, sc) in rows {
            s.push_str(&format!(
                "h^{k}: jet {j} | closed {c} | scaled jet {sj} | scaled closed {sc}{}\n",
                if j == c && sj == sc { "" } else { "  MISMATCH" }
            ));
        }
        s
    };
    let ok = (0..=k_max as u32).all(|k| {
        taylor_coeff_closed(a.n, a.r, k).map(|c| c == jet.coeff(k as usize)).unwrap_or(false)
            && scaled_taylor_coeff_closed(a.n, a.r, k).map(|c| c == scaled.coeff(k as usize)).unwrap_or(false)
    });
    Ok((text, a.common.out, if ok { 0 } else { 1 }))
}

fn jack(a: JackArgs) -> Result<Dispatched, Error> {
    check_common(&a.common)?;
    if a.n == 0 {
        return Err(Error::Usage("--n must be at least 1".into()));
    }
    let js = match jack_solve(a.n, a.common.degree, &a.beta) {
        Err(Error::Degeneracy(msg)) => return Err(Error::Usage(format!("degenerate beta: {msg}"))),
        other => other?,
    };
    let text = if a.common.json {
        let rows: Vec<Value> =
            js.iter().map(|j| json!({"lambda": j.lambda.to_string(), "polynomial": j.render()})).collect();
        let v = json!({"n": a.n, "beta": a.beta.to_string(), "jack": rows});
        serde_json::to_string_pretty(&v).expect("JSON values serialize") + "\n"
    } else {
        js.iter().map(|j| format!("J{} = {}\n", j.lambda, j.render())).collect()
    };
    Ok((text, a.common.out, 0))
}

/// The witness report, with the result of re-evaluating the witness.
pub fn witness_json(report: &WitnessReport) -> Result<Value, Error> {
    let witness = match &report.witness {
        None => Value::Null,
        Some(w) => {
            let again = w.reevaluate()?;
            let lhs: MultiPoly<BetaPoly> = OperatorMatrix::coords_to_poly(w.n, &w.residual)?;
            let rhs = OperatorMatrix::coords_to_poly(w.n, &again)?;
            json!({
                "n": w.n, "r": w.r, "s": w.s, "i": w.i, "j": w.j,
                "lambda": w.lambda.to_string(),
                "residual": w.rendering(),
                "reproduced": lhs == rhs,
            })
        }
    };
    Ok(json!({
        "grid": report.grid.describe(),
        "found": report.found(),
        "witness": witness,
    }))
}

fn witness(a: WitnessArgs) -> Result<Dispatched, Error> {
    check_common(&a.common)?;
    if a.order_max < 4 || a.common.jet_order < a.order_max {
        return Err(Error::Usage("need 4 <= --order-max <= --jet-order".into()));
    }
    let grid = WitnessGrid::standard(a.n_max, a.order_max, a.common.degree);
    let report = noncommutativity_witness(&mut Context::new(a.common.jet_order), &grid)?;
    let v = witness_json(&report)?;
    let reproduced = v["witness"].get("reproduced").and_then(Value::as_bool).unwrap_or(true);
    let text = if a.common.json {
        serde_json::to_string_pretty(&v).expect("JSON values serialize") + "\n"
    } else {
        match &report.witness {
            None => format!("no witness on {}\n", grid.describe()),
            Some(w) => format!(
                "witness on {}: n={} r={} s={} i={} j={} on m{} gives {}{}\n",
                grid.describe(),
                w.n,
                w.r,
                w.s,
                w.i,
                w.j,
                w.lambda,
                w.rendering(),
                if reproduced { "" } else { " (NOT reproduced)" }
            ),
        }
    };
    let expected = match a.expect.as_deref() {
        Some("found") => report.found(),
        Some(_) => !report.found(),
        None => true,
    };
    Ok((text, a.common.out, if expected && reproduced { 0 } else { 1 }))
}
