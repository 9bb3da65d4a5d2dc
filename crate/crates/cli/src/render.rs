//! JSON, CSV and aligned-text rendering. Keys and rows come out in ascending
//! order, so output is byte-stable for a fixed invocation.

use std::collections::BTreeMap;
use std::fmt::Write;

use clap::ValueEnum;
use latpath_core::{LatticePoint, SuiteReport, WeightedPath};
use num_bigint::BigUint;
use serde_json::{json, Map, Number, Value};

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

pub enum Output {
    Counts {
        l: i64,
        model: &'static str,
        n: i64,
        all_levels: bool,
        rows: BTreeMap<i64, BTreeMap<i64, BigUint>>,
    },
    Decomposition {
        l: i64,
        n: i64,
        mults: BTreeMap<i64, BigUint>,
        check: Option<(BigUint, BigUint)>,
    },
    Paths {
        l: i64,
        model: &'static str,
        m: i64,
        n: i64,
        paths: Vec<WeightedPath>,
        total: BigUint,
    },
    Reports(Vec<SuiteReport>),
    Boundary {
        l: i64,
        model: &'static str,
        strip: i64,
        n_max: i64,
        points: Vec<LatticePoint>,
    },
}

/// Big integers stay JSON numbers of unbounded size.
fn number(v: &BigUint) -> Value {
    Value::Number(
        v.to_string()
            .parse::<Number>()
            .expect("decimal digits form a JSON number"),
    )
}

fn keyed(row: &BTreeMap<i64, BigUint>) -> Value {
    Value::Object(
        row.iter()
            .map(|(k, v)| (k.to_string(), number(v)))
            .collect::<Map<_, _>>(),
    )
}

impl Output {
    pub fn is_mismatch(&self) -> bool {
        match self {
            Output::Decomposition {
                check: Some((got, pow2)),
                ..
            } => got != pow2,
            Output::Reports(reports) => reports.iter().any(|r| !r.passed()),
            _ => false,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = self.json().to_string();
                s.push('\n');
                s
            }
            Format::Csv => self.csv(),
            Format::Pretty => self.pretty(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Output::Counts {
                l,
                n,
                all_levels: false,
                rows,
                ..
            } => {
                json!({ "l": l, "N": n, "counts": keyed(&rows[n]) })
            }
            Output::Counts { l, n, rows, .. } => {
                let levels: Map<_, _> = rows
                    .iter()
                    .map(|(k, row)| (k.to_string(), keyed(row)))
                    .collect();
                json!({ "l": l, "N": n, "levels": levels })
            }
            Output::Decomposition { mults, check, .. } => {
                let mut out = Map::new();
                out.insert("mults".into(), keyed(mults));
                if let Some((got, pow2)) = check {
                    out.insert("dim_check".into(), got.to_string().into());
                    out.insert("pow2".into(), pow2.to_string().into());
                }
                Value::Object(out)
            }
            Output::Paths {
                l,
                model,
                m,
                n,
                paths,
                total,
            } => {
                let paths: Vec<Value> = paths
                    .iter()
                    .map(|p| json!({ "word": p.word(), "weight": number(&p.weight) }))
                    .collect();
                json!({ "l": l, "model": model, "M": m, "N": n, "paths": paths, "total": number(total) })
            }
            Output::Reports(reports) => {
                let suites: Vec<Value> = reports
                    .iter()
                    .map(|r| {
                        let mut entry = json!({
                            "suite": r.suite.name(),
                            "status": if r.passed() { "pass" } else { "fail" },
                            "checks": r.checks,
                        });
                        if let Some(c) = &r.counterexample {
                            entry["counterexample"] = json!({
                                "suite": c.suite, "l": c.l, "M": c.m, "N": c.n,
                                "expected": c.expected, "got": c.got,
                            });
                        }
                        entry
                    })
                    .collect();
                json!({ "pass": !self.is_mismatch(), "suites": suites })
            }
            Output::Boundary {
                l,
                model,
                strip,
                n_max,
                points,
            } => {
                let points: Vec<Value> = points.iter().map(|p| json!([p.x, p.n])).collect();
                json!({ "l": l, "model": model, "strip": strip, "N_max": n_max, "boundary": points })
            }
        }
    }

    fn csv(&self) -> String {
        let mut s = String::new();
        match self {
            Output::Counts { l, model, rows, .. } => {
                s.push_str("l,model,N,M,count\n");
                for (n, row) in rows {
                    for (m, v) in row {
                        writeln!(s, "{l},{model},{n},{m},{v}").unwrap();
                    }
                }
            }
            Output::Decomposition { l, n, mults, .. } => {
                s.push_str("l,model,N,M,count\n");
                for (k, v) in mults {
                    writeln!(s, "{l},uq,{n},{k},{v}").unwrap();
                }
            }
            Output::Paths { paths, .. } => {
                s.push_str("word,weight\n");
                for p in paths {
                    writeln!(s, "{},{}", p.word(), p.weight).unwrap();
                }
            }
            Output::Reports(reports) => {
                s.push_str("suite,status,checks,l,M,N,expected,got\n");
                for r in reports {
                    let status = if r.passed() { "pass" } else { "fail" };
                    write!(s, "{},{status},{}", r.suite, r.checks).unwrap();
                    match &r.counterexample {
                        Some(c) => writeln!(s, ",{},{},{},{},{}", c.l, c.m, c.n, c.expected, c.got),
                        None => writeln!(s, ",,,,,"),
                    }
                    .unwrap();
                }
            }
            Output::Boundary { points, .. } => {
                s.push_str("M,N\n");
                for p in points {
                    writeln!(s, "{},{}", p.x, p.n).unwrap();
                }
            }
        }
        s
    }

    fn pretty(&self) -> String {
        let mut s = String::new();
        match self {
            Output::Counts { l, model, rows, .. } => {
                for (n, row) in rows {
                    writeln!(s, "{model} l={l} N={n}").unwrap();
                    table(
                        &mut s,
                        ("M", "count"),
                        row.iter().map(|(m, v)| (m.to_string(), v.to_string())),
                    );
                }
            }
            Output::Decomposition { l, n, mults, check } => {
                writeln!(s, "T(1)^{n} at l={l}").unwrap();
                table(
                    &mut s,
                    ("k", "mult"),
                    mults.iter().map(|(k, v)| (k.to_string(), v.to_string())),
                );
                if let Some((got, pow2)) = check {
                    writeln!(s, "sum mult*dim = {got}, 2^N = {pow2}").unwrap();
                }
            }
            Output::Paths {
                l,
                model,
                m,
                n,
                paths,
                total,
            } => {
                writeln!(
                    s,
                    "{model} l={l} ({m}, {n}): {} paths, total weight {total}",
                    paths.len()
                )
                .unwrap();
                table(
                    &mut s,
                    ("word", "weight"),
                    paths.iter().map(|p| (p.word(), p.weight.to_string())),
                );
            }
            Output::Reports(reports) => {
                for r in reports {
                    let status = if r.passed() { "PASS" } else { "FAIL" };
                    writeln!(s, "{status}  {:<12} {:>7} checks", r.suite.name(), r.checks).unwrap();
                    if let Some(c) = &r.counterexample {
                        writeln!(s, "      first counterexample {c}").unwrap();
                    }
                }
            }
            Output::Boundary {
                l,
                model,
                strip,
                n_max,
                points,
            } => {
                writeln!(
                    s,
                    "{model} l={l} strip {strip}, N <= {n_max}: {} boundary points",
                    points.len()
                )
                .unwrap();
                for p in points {
                    writeln!(s, "  {p}").unwrap();
                }
            }
        }
        s
    }
}

fn table(s: &mut String, head: (&str, &str), rows: impl Iterator<Item = (String, String)>) {
    let rows: Vec<_> = rows.collect();
    let w = rows
        .iter()
        .map(|r| r.0.len())
        .chain([head.0.len()])
        .max()
        .unwrap_or(0);
    writeln!(s, "  {:>w$}  {}", head.0, head.1).unwrap();
    for (a, b) in rows {
        writeln!(s, "  {a:>w$}  {b}").unwrap();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use latpath_core::{Counterexample, Suite};

    #[test]
    fn failed_report_is_a_mismatch() {
        let bad = SuiteReport {
            suite: Suite::Oracle,
            checks: 3,
            counterexample: Some(Counterexample {
                suite: "oracle",
                l: 3,
                m: 1,
                n: 5,
                expected: "5".into(),
                got: "4".into(),
            }),
        };
        let out = Output::Reports(vec![bad]);
        assert!(out.is_mismatch());
        let json = out.render(Format::Json);
        assert!(json.starts_with("{\"pass\":false,"));
        assert!(json.contains("\"counterexample\":{\"suite\":\"oracle\",\"l\":3,\"M\":1,\"N\":5,\"expected\":\"5\",\"got\":\"4\"}"));
        assert_eq!(
            out.render(Format::Csv),
            "suite,status,checks,l,M,N,expected,got\noracle,fail,3,3,1,5,5,4\n"
        );
    }

    #[test]
    fn dimension_mismatch() {
        let out = Output::Decomposition {
            l: 3,
            n: 2,
            mults: BTreeMap::new(),
            check: Some((BigUint::from(3u8), BigUint::from(4u8))),
        };
        assert!(out.is_mismatch());
    }
}
