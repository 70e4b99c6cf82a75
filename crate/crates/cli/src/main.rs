use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use qcharlier::algebra::{qstirling1, qstirling2};
use qcharlier::charlier::charlier_explicit;
use qcharlier::classical::{classical_explicit, classical_moments};
use qcharlier::linearization::formulas::{canonical_order, linearization_formula};
use qcharlier::linearization::wpsr::fixed_point_sum;
use qcharlier::moments::{
    linearization_bruteforce, moments_closed, orthogonality_check, StirlingPath,
};
use qcharlier::partitions::{parse_word, stats, RgWord};
use qcharlier::verify::{criterion_id, run, run_all, Budget, Outcome, CRITERIA, DEFAULT_MAX_SIZE};
use qcharlier::{LaurentPoly, TriPoly};

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser)]
#[command(
    name = "qcharlier",
    version,
    about = "Exact q-Charlier polynomials, moments and linearization coefficients"
)]
struct Cli {
    /// Write CSV instead of JSON.
    #[arg(long, global = true)]
    csv: bool,

    /// Bound on instance sizes for enumeration-heavy work.
    #[arg(long, global = true, env = "QCHARLIER_MAX_SIZE", default_value_t = DEFAULT_MAX_SIZE)]
    max_size: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// The polynomial C_n(x, a; q).
    Poly { n: usize },
    /// The moments mu_0 .. mu_N.
    Moments { n: usize },
    /// A q-Stirling number of the first or second kind.
    Stirling {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=2))]
        kind: u8,
        n: usize,
        k: usize,
    },
    /// The four statistics ls, lb, rs, rb of a restricted growth word.
    Stats { word: String },
    /// L(C_n C_m).
    Orth { n: usize, m: usize },
    /// L(C_n1 C_n2 C_n3), by every method unless one is chosen.
    Linearize {
        n1: usize,
        n2: usize,
        n3: usize,
        #[arg(long)]
        method: Option<Method>,
    },
    /// Run an identity suite by number or name, or `all`.
    Verify { suite: String },
    /// The rescaled classical family; `z` is reported in the `x` column.
    Classical {
        #[command(subcommand)]
        what: Classical,
    },
}

#[derive(Subcommand)]
enum Classical {
    Poly { n: usize },
    Moments { n: usize },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Formula,
    Bruteforce,
    Fixedpoints,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Formula => "formula",
            Method::Bruteforce => "bruteforce",
            Method::Fixedpoints => "fixedpoints",
        }
    }
}

#[derive(Serialize)]
struct Term {
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    a: u32,
    x: u32,
    q: i64,
    c: String,
}

fn terms(p: &TriPoly, n: Option<usize>) -> Vec<Term> {
    p.entries()
        .into_iter()
        .map(|e| Term {
            n,
            a: e.a,
            x: e.x,
            q: e.q,
            c: e.coeff.to_string(),
        })
        .collect()
}

fn table(ps: &[TriPoly]) -> Vec<Term> {
    ps.iter()
        .enumerate()
        .flat_map(|(n, p)| terms(p, Some(n)))
        .collect()
}

enum Failure {
    Usage(String),
    Violation(String),
}

struct Report {
    command: &'static str,
    params: Value,
    body: Body,
}

enum Body {
    Terms(Vec<Term>),
    Stats([(&'static str, usize); 4]),
    Suite(Vec<Outcome>),
}

impl Report {
    fn to_json(&self) -> String {
        let mut v = json!({
            "command": self.command,
            "params": self.params,
            "version": VERSION,
        });
        match &self.body {
            Body::Terms(t) => v["terms"] = json!(t),
            Body::Stats(s) => {
                v["stats"] = s.iter().map(|(k, n)| (k.to_string(), json!(n))).collect();
            }
            Body::Suite(os) => {
                v["criteria"] = os
                    .iter()
                    .map(|o| {
                        json!({
                            "id": o.id,
                            "suite": o.slug,
                            "name": o.name,
                            "passed": o.passed(),
                            "checks": o.result.as_ref().ok(),
                            "counterexample": o.result.as_ref().err(),
                            "clipped": o.clipped,
                        })
                    })
                    .collect();
            }
        }
        serde_json::to_string_pretty(&v).expect("json values serialize")
    }

    fn to_csv(&self) -> String {
        let mut out = String::new();
        match &self.body {
            Body::Terms(t) => {
                let indexed = t.iter().any(|e| e.n.is_some());
                out.push_str(if indexed { "n,a,x,q,c\n" } else { "a,x,q,c\n" });
                for e in t {
                    if let Some(n) = e.n {
                        out.push_str(&format!("{n},"));
                    }
                    out.push_str(&format!("{},{},{},{}\n", e.a, e.x, e.q, e.c));
                }
            }
            Body::Stats(s) => {
                out.push_str("statistic,value\n");
                for (k, n) in s {
                    out.push_str(&format!("{k},{n}\n"));
                }
            }
            Body::Suite(os) => {
                out.push_str("id,suite,passed,checks,clipped\n");
                for o in os {
                    let checks = o.result.as_ref().map(|n| n.to_string()).unwrap_or_default();
                    out.push_str(&format!(
                        "{},{},{},{checks},{}\n",
                        o.id,
                        o.slug,
                        o.passed(),
                        o.clipped
                    ));
                }
            }
        }
        out
    }
}

fn laurent_terms(p: &LaurentPoly) -> Vec<Term> {
    terms(&TriPoly::from_laurent(p.clone()), None)
}

/// The table, the methods that ran, and any disagreement between them.
type Linearized = (Vec<Term>, Vec<Method>, Option<String>);

fn linearize(
    sizes: [usize; 3],
    method: Option<Method>,
    max_size: usize,
) -> Result<Linearized, Failure> {
    let total: usize = sizes.iter().sum();
    let fits = total <= max_size;
    let methods = match method {
        Some(Method::Fixedpoints) if !fits => {
            return Err(Failure::Usage(format!(
                "fixed-point enumeration needs n1+n2+n3 = {total} <= --max-size {max_size}"
            )))
        }
        Some(m) => vec![m],
        None if fits => vec![Method::Formula, Method::Bruteforce, Method::Fixedpoints],
        None => vec![Method::Formula, Method::Bruteforce],
    };
    let mut values = Vec::new();
    for m in &methods {
        let v = match m {
            Method::Formula => {
                linearization_formula(sizes).map_err(|e| Failure::Violation(e.to_string()))?
            }
            Method::Bruteforce => linearization_bruteforce(&sizes),
            Method::Fixedpoints => fixed_point_sum(5, canonical_order(sizes)),
        };
        values.push((*m, v));
    }
    let first = &values[0].1;
    let disagreement = values.iter().find(|(_, v)| v != first).map(|(m, v)| {
        format!(
            "methods disagree on {sizes:?}: {} gives {first}, {} gives {v}",
            values[0].0.name(),
            m.name()
        )
    });
    let t = terms(first, None);
    Ok((t, methods, disagreement))
}

fn execute(cli: &Cli) -> Result<(Report, Option<String>), Failure> {
    let max_size = cli.max_size;
    let done = |command, params, body| {
        Ok((
            Report {
                command,
                params,
                body,
            },
            None,
        ))
    };
    match &cli.command {
        Command::Poly { n } => done(
            "poly",
            json!({ "n": n }),
            Body::Terms(terms(&charlier_explicit(*n), None)),
        ),
        Command::Moments { n } => {
            let mu = moments_closed(*n, StirlingPath::Recurrence);
            done(
                "moments",
                json!({ "n": n }),
                Body::Terms(table(mu.moments())),
            )
        }
        Command::Stirling { kind, n, k } => {
            let s = if *kind == 1 {
                qstirling1(*n, *k)
            } else {
                qstirling2(*n, *k)
            };
            done(
                "stirling",
                json!({ "kind": kind, "n": n, "k": k }),
                Body::Terms(laurent_terms(&s)),
            )
        }
        Command::Stats { word } => {
            let letters = parse_word(word).map_err(|e| Failure::Usage(e.to_string()))?;
            RgWord::new(letters.clone()).map_err(|e| Failure::Usage(e.to_string()))?;
            let s = stats(&letters);
            done(
                "stats",
                json!({ "word": word }),
                Body::Stats([("ls", s.ls), ("lb", s.lb), ("rs", s.rs), ("rb", s.rb)]),
            )
        }
        Command::Orth { n, m } => done(
            "orth",
            json!({ "n": n, "m": m }),
            Body::Terms(terms(&orthogonality_check(*n, *m), None)),
        ),
        Command::Linearize { n1, n2, n3, method } => {
            let (t, used, bad) = linearize([*n1, *n2, *n3], *method, max_size)?;
            let used: Vec<&str> = used.into_iter().map(Method::name).collect();
            let params = json!({ "n1": n1, "n2": n2, "n3": n3, "methods": used });
            Ok((
                Report {
                    command: "linearize",
                    params,
                    body: Body::Terms(t),
                },
                bad,
            ))
        }
        Command::Verify { suite } => {
            let budget = Budget::new(max_size);
            let outcomes = if suite == "all" {
                run_all(budget)
            } else {
                let id = criterion_id(suite).ok_or_else(|| {
                    let names: Vec<&str> = CRITERIA.iter().map(|c| c.1).collect();
                    Failure::Usage(format!(
                        "unknown suite {suite}; expected all, 1-13 or one of {}",
                        names.join(", ")
                    ))
                })?;
                vec![run(id, budget)]
            };
            let bad: Vec<String> = outcomes
                .iter()
                .filter_map(|o| {
                    o.result
                        .as_ref()
                        .err()
                        .map(|e| format!("[{}] {}: {e}", o.id, o.slug))
                })
                .collect();
            let params = json!({ "suite": suite, "max_size": max_size });
            let report = Report {
                command: "verify",
                params,
                body: Body::Suite(outcomes),
            };
            Ok((report, (!bad.is_empty()).then(|| bad.join("\n"))))
        }
        Command::Classical { what } => match what {
            Classical::Poly { n } => done(
                "classical poly",
                json!({ "n": n }),
                Body::Terms(terms(&classical_explicit(*n), None)),
            ),
            Classical::Moments { n } => {
                let mu = classical_moments(*n);
                done(
                    "classical moments",
                    json!({ "n": n }),
                    Body::Terms(table(mu.moments())),
                )
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(&cli) {
        Ok((report, violation)) => {
            let text = if cli.csv {
                report.to_csv()
            } else {
                report.to_json() + "\n"
            };
            print!("{text}");
            match violation {
                Some(v) => {
                    eprintln!("{v}");
                    ExitCode::from(1)
                }
                None => ExitCode::SUCCESS,
            }
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Violation(m)) => {
            eprintln!("{m}");
            ExitCode::from(1)
        }
    }
}
