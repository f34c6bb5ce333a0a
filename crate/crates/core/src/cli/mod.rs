//! The `cmline` command line: `compute`, `verify`, `sweep` and `examples`.
//!
//! [`run`] takes the argument list and output streams so that the binary is
//! a one-line wrapper and tests can drive the CLI in-process. Output is
//! byte-deterministic; exit codes follow [`Error::exit_code`].

mod builtins;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

pub use builtins::{builtin, Builtin, BUILTINS};

use crate::error::{Error, Result};
use crate::exactalg::Rational;
use crate::family::{Bindings, Construction, DEFAULT_PARAM};
use crate::lines::{self, WeightData};
use crate::verify::{run_all, run_check, CheckConfig, Subject};

#[derive(Parser, Debug)]
#[command(
    name = "cmline",
    version,
    about = "Exact CM line degrees of polarised families over curves"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute one quantity for a family.
    Compute {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum)]
        quantity: Quantity,
        /// Argument of λ(k).
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i64>,
        /// Leading weight coefficient b0 (futaki).
        #[arg(long, allow_hyphen_values = true)]
        b0: Option<Rational>,
        /// Sub-leading weight coefficient b1 (futaki).
        #[arg(long, allow_hyphen_values = true)]
        b1: Option<Rational>,
    },
    /// Run the identity checks on a family; exit 1 if any fails.
    Verify {
        #[command(flatten)]
        family: FamilyArgs,
        /// Run only this check.
        #[arg(long)]
        check: Option<String>,
        /// Largest rescaling factor for the homogeneity check.
        #[arg(long, default_value_t = 5)]
        r_max: i64,
    },
    /// Tabulate CM degree, µ and a0 along a parameter.
    Sweep {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value = DEFAULT_PARAM)]
        param: String,
        #[arg(long, allow_hyphen_values = true)]
        from: Rational,
        #[arg(long, allow_hyphen_values = true)]
        to: Rational,
        #[arg(long)]
        steps: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// List the built-in families with their construction documents.
    Examples,
}

#[derive(Args, Debug)]
struct FamilyArgs {
    /// A built-in family name or a path to a construction document.
    family: String,
    /// Value for the parameter `eps`.
    #[arg(long, allow_hyphen_values = true)]
    eps: Option<Rational>,
    /// Value for any named parameter, as NAME=P/Q.
    #[arg(long = "set", value_name = "NAME=P/Q", value_parser = parse_binding)]
    set: Vec<(String, Rational)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
enum Quantity {
    Cm,
    CmPrime,
    Mu,
    LambdaVector,
    LambdaOfK,
    HilbBipoly,
    ChPoly,
    Sigma,
    CmEps,
    Futaki,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

fn parse_binding(s: &str) -> std::result::Result<(String, Rational), String> {
    let (name, value) = s
        .split_once('=')
        .ok_or_else(|| format!("expected NAME=P/Q, got {s:?}"))?;
    let value = value.parse::<Rational>().map_err(|e| e.to_string())?;
    Ok((name.trim().to_string(), value))
}

/// A construction together with its parameter values.
struct Loaded {
    construction: Construction,
    bindings: Bindings,
}

impl FamilyArgs {
    fn load(&self) -> Result<Loaded> {
        let (construction, mut bindings) = match builtin(&self.family) {
            Some(b) => (b.construction(), b.default_bindings()),
            None => {
                let text = std::fs::read_to_string(Path::new(&self.family)).map_err(|e| {
                    Error::Parse(format!(
                        "{:?} is neither a built-in family nor a readable file: {e}",
                        self.family
                    ))
                })?;
                (Construction::from_json(&text)?, Bindings::new())
            }
        };
        for (name, value) in &self.set {
            bindings.insert(name.clone(), value.clone());
        }
        if let Some(eps) = &self.eps {
            bindings.insert(DEFAULT_PARAM.to_string(), eps.clone());
        }
        Ok(Loaded { construction, bindings })
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<()> {
    writeln!(out, "{text}").map_err(|e| Error::Precondition(format!("writing output: {e}")))
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Compute {
            family,
            quantity,
            k,
            b0,
            b1,
        } => {
            let value = compute(&family.load()?, quantity, k, b0, b1)?;
            emit(out, &value.to_string())?;
            Ok(0)
        }
        Command::Verify { family, check, r_max } => {
            let loaded = family.load()?;
            let (value, all_pass) = verify(&loaded, check.as_deref(), r_max)?;
            emit(out, &serde_json::to_string_pretty(&value).expect("json"))?;
            Ok(if all_pass { 0 } else { 1 })
        }
        Command::Sweep {
            family,
            param,
            from,
            to,
            steps,
            format,
        } => {
            let rows = sweep(&family.load()?, &param, &from, &to, steps)?;
            emit(out, &render_sweep(&param, &rows, format)?)?;
            Ok(0)
        }
        Command::Examples => {
            emit(out, &serde_json::to_string_pretty(&examples()).expect("json"))?;
            Ok(0)
        }
    }
}

fn compute(
    loaded: &Loaded,
    quantity: Quantity,
    k: Option<i64>,
    b0: Option<Rational>,
    b1: Option<Rational>,
) -> Result<Value> {
    let blowup_only = |what: &str| -> Result<_> {
        loaded
            .construction
            .resolve_blowup(&loaded.bindings)?
            .map(|r| r.blowup)
            .ok_or_else(|| Error::Precondition(format!("{what} is defined only for a blowup family")))
    };
    let value = match quantity {
        Quantity::Sigma => json!({ "sigma": report::rational(&blowup_only("sigma")?.sigma()) }),
        Quantity::CmEps => json!({ "cm_eps": report::rational_fn(&blowup_only("cm_eps")?.cm_degree()) }),
        other => {
            let f = loaded.construction.evaluate(&loaded.bindings)?;
            match other {
                Quantity::Cm => json!({ "cm_degree": report::rational(&lines::cm_degree(&f)?) }),
                Quantity::CmPrime => {
                    json!({ "cm_prime_degree": report::rational(&lines::cm_prime_degree(&f)?) })
                }
                Quantity::Mu => json!({ "mu": report::rational(&lines::mu(&f)) }),
                Quantity::LambdaVector => {
                    let v = lines::lambda_vector(&f)?;
                    json!({ "lambda_vector": report::lambda_vector(&v), "complete": v.is_complete() })
                }
                Quantity::LambdaOfK => {
                    let k = k.ok_or_else(|| Error::Parse("lambda_of_k needs --k".into()))?;
                    json!({ "k": k, "lambda_of_k": report::rational(&lines::lambda_of_k(&f, k)?) })
                }
                Quantity::HilbBipoly => {
                    json!({ "hilb_degree": report::bipoly(&lines::hilb_degree_bipoly(&f)?) })
                }
                Quantity::ChPoly => json!({ "ch_degree": report::unipoly(&lines::ch_degree(&f)?) }),
                Quantity::Futaki => {
                    let (Some(b0), Some(b1)) = (b0, b1) else {
                        return Err(Error::Parse("futaki needs --b0 and --b1".into()));
                    };
                    json!({ "futaki": report::rational(&lines::futaki(&f, &WeightData { b0, b1 })) })
                }
                Quantity::Sigma | Quantity::CmEps => unreachable!("handled above"),
            }
        }
    };
    Ok(value)
}

fn verify(loaded: &Loaded, check: Option<&str>, r_max: i64) -> Result<(Value, bool)> {
    let subject = Subject::from_construction(&loaded.construction, &loaded.bindings)?;
    let config = CheckConfig {
        r_max,
        ..CheckConfig::default()
    };
    let reports = match check {
        Some(name) => match run_check(name, &subject, &config)? {
            Some(r) => vec![r],
            None => {
                return Err(Error::Capability(format!(
                    "check {name} does not apply to {}",
                    subject.family.label()
                )))
            }
        },
        None => run_all(&subject, &config),
    };
    let all_pass = reports.iter().all(|r| r.passed());
    let value = json!({
        "family": subject.family.label(),
        "all_pass": all_pass,
        "reports": reports,
    });
    Ok((value, all_pass))
}

/// One sweep sample.
pub struct SweepRow {
    pub value: Rational,
    pub cm_degree: Rational,
    pub mu: Rational,
    pub a0: Rational,
}

const DECIMAL_DIGITS: usize = 12;

fn sweep(loaded: &Loaded, param: &str, from: &Rational, to: &Rational, steps: usize) -> Result<Vec<SweepRow>> {
    let free = loaded.construction.free_params();
    if free.is_empty() {
        return Err(Error::Precondition(
            "sweep needs a blowup family with a symbolic parameter".into(),
        ));
    }
    if !free.contains(param) {
        return Err(Error::Precondition(format!(
            "{param:?} is not a parameter of this family; available: {}",
            free.into_iter().collect::<Vec<_>>().join(", ")
        )));
    }
    if steps == 0 {
        return Err(Error::Precondition("steps must be at least 1".into()));
    }
    let step = if steps == 1 {
        Rational::zero()
    } else {
        (to - from) / Rational::from(steps as i64 - 1)
    };
    let mut bindings = loaded.bindings.clone();
    (0..steps)
        .map(|i| {
            let value = from + &(&step * &Rational::from(i as i64));
            bindings.insert(param.to_string(), value.clone());
            let f = loaded.construction.evaluate(&bindings)?;
            Ok(SweepRow {
                cm_degree: lines::cm_degree(&f)?,
                mu: lines::mu(&f),
                a0: f.a0(),
                value,
            })
        })
        .collect()
}

fn render_sweep(param: &str, rows: &[SweepRow], format: Format) -> Result<String> {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let csv_err = |e: csv::Error| Error::Precondition(format!("writing csv: {e}"));
            w.write_record([param, "cm_degree", "mu", "a0", "cm_degree_decimal"])
                .map_err(csv_err)?;
            for r in rows {
                w.write_record([
                    r.value.to_string(),
                    r.cm_degree.to_string(),
                    r.mu.to_string(),
                    r.a0.to_string(),
                    r.cm_degree.to_decimal_string(DECIMAL_DIGITS),
                ])
                .map_err(csv_err)?;
            }
            let bytes = w
                .into_inner()
                .map_err(|e| Error::Precondition(format!("writing csv: {e}")))?;
            let text = String::from_utf8(bytes).expect("csv output is utf-8");
            Ok(text.trim_end().to_string())
        }
        Format::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|r| {
                    let mut m = Map::new();
                    m.insert(param.to_string(), report::rational(&r.value));
                    m.insert("cm_degree".into(), report::rational(&r.cm_degree));
                    m.insert("mu".into(), report::rational(&r.mu));
                    m.insert("a0".into(), report::rational(&r.a0));
                    m.insert(
                        "cm_degree_decimal".into(),
                        r.cm_degree.to_decimal_string(DECIMAL_DIGITS).into(),
                    );
                    Value::Object(m)
                })
                .collect();
            Ok(serde_json::to_string_pretty(&rows).expect("json"))
        }
    }
}

fn examples() -> Value {
    let list: Vec<Value> = BUILTINS
        .iter()
        .map(|b| {
            let defaults: Map<String, Value> = b
                .default_bindings()
                .iter()
                .map(|(k, v)| (k.clone(), report::rational(v)))
                .collect();
            json!({
                "name": b.name,
                "description": b.description,
                "defaults": defaults,
                "construction": b.construction().to_json_value(),
            })
        })
        .collect();
    json!({ "builtins": list })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("cmline").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn sigma_of_builtin() {
        let (code, out, _) = call(&["compute", "ex5_2_blowup", "--quantity", "sigma"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), r#"{"sigma":"-12"}"#);
    }

    #[test]
    fn eps_flag_overrides_default() {
        let (_, a, _) = call(&["compute", "ex5_2_blowup", "--quantity", "cm"]);
        let (_, b, _) = call(&["compute", "ex5_2_blowup", "--quantity", "cm", "--eps", "1/10"]);
        let (_, c, _) = call(&["compute", "ex5_2_blowup", "--quantity", "cm", "--set", "eps=1/5"]);
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["compute", "no_such_family", "--quantity", "cm"]).0, 2);
        assert_eq!(call(&["compute", "ex5_2_base", "--quantity", "nonsense"]).0, 2);
        assert_eq!(call(&["compute", "ex5_2_blowup", "--quantity", "lambda_vector"]).0, 0);
        assert_eq!(call(&["compute", "ex5_2_blowup", "--quantity", "hilb_bipoly"]).0, 3);
        assert_eq!(call(&["compute", "ex5_2_base", "--quantity", "sigma"]).0, 4);
        assert_eq!(
            call(&["sweep", "ex5_2_base", "--from", "0", "--to", "1", "--steps", "3"]).0,
            4
        );
        assert_eq!(call(&["verify", "ex5_2_blowup", "--check", "prop31"]).0, 3);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn sweep_single_step() {
        let (code, out, _) = call(&["sweep", "ex5_2_blowup", "--from", "1/10", "--to", "1/2", "--steps", "1"]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[0], "eps,cm_degree,mu,a0,cm_degree_decimal");
        assert!(lines[1].starts_with("1/10,-243/275,580/99,99/200,"));
    }

    #[test]
    fn examples_lists_five() {
        let (code, out, _) = call(&["examples"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["builtins"].as_array().unwrap().len(), 5);
    }
}
