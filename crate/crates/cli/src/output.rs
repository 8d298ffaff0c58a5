use std::io;

use clap::ValueEnum;
use kronecker::colored::{
    enumerate_blasiak, is_colored_yamanouchi, mixed_insertion_trace, ColoredLetter, ColoredTableau, ColoredWord,
};
use kronecker::rosas::{xi_report_with, XiReading};
use kronecker::symfun::{self, giambelli_leibniz};
use kronecker::tableau::{lr_tableaux, SkewSSYT};
use kronecker::verify::{run_suite, SuiteReport, SUITES};
use kronecker::{Error, Partition, Result};
use serde::Serialize;
use serde_json::json;

use crate::kron::KronReport;
use crate::Status;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

fn print_json<T: Serialize + ?Sized>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("output serializes"));
}

fn csv_out<R: AsRef<[u8]>>(header: &[&str], rows: impl IntoIterator<Item = Vec<R>>) {
    let mut w = csv::Writer::from_writer(io::stdout());
    w.write_record(header).expect("stdout");
    for row in rows {
        w.write_record(row).expect("stdout");
    }
    w.flush().expect("stdout");
}

fn one_line(text: &str) -> String {
    text.lines().map(str::trim_end).collect::<Vec<_>>().join(" / ")
}

fn indent(text: &str) -> String {
    text.lines().map(|l| format!("    {l}\n")).collect()
}

pub fn kron(report: &KronReport, fmt: Format, explain: bool) {
    match fmt {
        Format::Json => print_json(report),
        Format::Csv => csv_out(
            &["lambda", "mu", "nu", "method", "value", "runtime_ms"],
            report.results.iter().map(|r| {
                vec![
                    report.lambda.to_string(),
                    report.mu.to_string(),
                    report.nu.to_string(),
                    r.method.clone(),
                    r.value.to_string(),
                    r.runtime_ms.to_string(),
                ]
            }),
        ),
        Format::Text => {
            println!("g({}; {}; {})", report.lambda, report.mu, report.nu);
            for r in &report.results {
                match &r.summary {
                    Some(s) => println!("  {:<9}{:>6}   {s}", r.method, r.value),
                    None => println!("  {:<9}{:>6}", r.method, r.value),
                }
                if explain {
                    if let Some(text) = &r.explain_text {
                        print!("{}", indent(text));
                    }
                }
            }
            match report.value {
                Some(v) => println!("= {v}"),
                None => {
                    println!("methods disagree:");
                    for r in &report.results {
                        println!("  {} = {}", r.method, r.value);
                    }
                }
            }
        }
    }
}

fn print_tableaux<T>(
    items: &[T],
    fmt: Format,
    ytableau: bool,
    ascii: impl Fn(&T) -> String,
    ytab: impl Fn(&T) -> String,
) where
    T: Serialize,
{
    match fmt {
        Format::Json => print_json(&json!({ "count": items.len(), "tableaux": items })),
        Format::Csv => csv_out(
            &["index", "tableau"],
            items.iter().enumerate().map(|(i, t)| vec![(i + 1).to_string(), one_line(&ascii(t))]),
        ),
        Format::Text => {
            for t in items {
                if ytableau {
                    println!("{}", ytab(t));
                } else {
                    println!("{}", ascii(t));
                }
            }
            println!("count: {}", items.len());
        }
    }
}

pub fn lr(lambda: &Partition, mu: &Partition, nu: &Partition, fmt: Format, ytableau: bool) -> Result<()> {
    if lambda.size() != mu.size() + nu.size() {
        return Err(Error::SizeMismatch(format!("|{lambda}| != |{mu}| + |{nu}|")));
    }
    if !lambda.contains(mu) {
        return Err(Error::NotContained(mu.to_string(), lambda.to_string()));
    }
    let tabs = lr_tableaux(lambda, mu, nu);
    print_tableaux(&tabs, fmt, ytableau, SkewSSYT::to_string, SkewSSYT::to_ytableau);
    Ok(())
}

pub fn blasiak(lambda: &Partition, d: usize, nu: &Partition, fmt: Format, ytableau: bool) -> Result<()> {
    let tabs = enumerate_blasiak(lambda, d, nu)?;
    print_tableaux(&tabs, fmt, ytableau, ColoredTableau::to_string, ColoredTableau::to_ytableau);
    Ok(())
}

pub fn trace(word: &str, fmt: Format) -> Result<()> {
    let w: ColoredWord = word.parse()?;
    let steps = mixed_insertion_trace(&w);
    let blft = w.blft();
    let yamanouchi = is_colored_yamanouchi(&ColoredWord(blft.iter().map(|&x| ColoredLetter::plain(x)).collect()));
    let blft_text = if blft.iter().all(|&x| x < 10) {
        blft.iter().map(|x| x.to_string()).collect::<String>()
    } else {
        blft.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
    };
    match fmt {
        Format::Json => print_json(&json!({
            "word": w.to_string(),
            "steps": w.letters().iter().zip(&steps).map(|(x, t)| json!({ "letter": x.to_string(), "tableau": t })).collect::<Vec<_>>(),
            "blft": blft,
            "colored_yamanouchi": yamanouchi,
        })),
        Format::Csv => csv_out(
            &["step", "letter", "tableau"],
            w.letters()
                .iter()
                .zip(&steps)
                .enumerate()
                .map(|(i, (x, t))| vec![(i + 1).to_string(), x.to_string(), one_line(&t.to_string())]),
        ),
        Format::Text => {
            println!("word: {w}");
            for (i, (x, t)) in w.letters().iter().zip(&steps).enumerate() {
                println!("step {}: insert {x}", i + 1);
                println!("{t}");
            }
            println!("blft: {blft_text}");
            println!("colored Yamanouchi: {}", if yamanouchi { "yes" } else { "no" });
        }
    }
    Ok(())
}

pub fn rosas(eta: &Partition, a: i64, r: i64, c: i64, as_printed: bool, fmt: Format) -> Result<()> {
    let reading = if as_printed { XiReading::AsPrinted } else { XiReading::Corrected };
    let report = xi_report_with(eta, a, r, c, reading)?;
    match fmt {
        Format::Json => print_json(&report),
        Format::Csv => csv_out(
            &["eta", "a", "r", "c", "case", "value"],
            [vec![eta.to_string(), a.to_string(), r.to_string(), c.to_string(), report.case.tag().to_string(), report.value.to_string()]],
        ),
        Format::Text => println!("Xi[{a}]_{eta}({r},{c}): {report}"),
    }
    Ok(())
}

pub fn giambelli(lambda: &Partition, fmt: Format) -> Result<()> {
    let terms = giambelli_leibniz(lambda)?;
    match fmt {
        Format::Json => print_json(&terms),
        Format::Csv => csv_out(
            &["sign", "factors"],
            terms.iter().map(|t| {
                vec![t.sign.to_string(), t.hooks.iter().map(|h| h.to_string()).collect::<Vec<_>>().join(" ")]
            }),
        ),
        Format::Text => {
            println!("s[{lambda}] =");
            for t in &terms {
                println!("  {t}");
            }
        }
    }
    Ok(())
}

pub fn jacobi_trudi(lambda: &Partition, fmt: Format) {
    let terms = symfun::jacobi_trudi(lambda);
    match fmt {
        Format::Json => print_json(&terms),
        Format::Csv => csv_out(
            &["sign", "indices"],
            terms.iter().map(|t| {
                vec![t.sign.to_string(), t.indices.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(" ")]
            }),
        ),
        Format::Text => {
            println!("s[{lambda}] =");
            for t in &terms {
                println!("  {t}");
            }
        }
    }
}

pub fn coproduct(lambda: &Partition, fmt: Format) {
    let terms = symfun::coproduct(lambda);
    match fmt {
        Format::Json => print_json(
            &terms.iter().map(|(m, n, c)| json!({ "mu": m, "nu": n, "coefficient": c })).collect::<Vec<_>>(),
        ),
        Format::Csv => csv_out(
            &["mu", "nu", "coefficient"],
            terms.iter().map(|(m, n, c)| vec![m.to_string(), n.to_string(), c.to_string()]),
        ),
        Format::Text => {
            println!("Δ s[{lambda}] =");
            for (m, n, c) in &terms {
                println!("  {c} s[{m}] ⊗ s[{n}]");
            }
        }
    }
}

pub fn verify(suite: &str, n: Option<usize>, jobs: usize, fmt: Format) -> Result<Status> {
    if suite == "list" {
        for s in SUITES {
            println!("{:<18} n<={:<3} {}", s.name, s.default_n, s.description);
        }
        return Ok(Status::Ok);
    }
    let names: Vec<&str> = if suite == "all" { SUITES.iter().map(|s| s.name).collect() } else { vec![suite] };
    let mut reports: Vec<SuiteReport> = Vec::new();
    for name in names {
        let bound = match (n, kronecker::verify::suite(name)) {
            (Some(n), _) => n,
            (None, Some(s)) => s.default_n,
            (None, None) => return Err(Error::Parse(format!("unknown suite {name:?}; try `verify list`"))),
        };
        reports.push(run_suite(name, bound, jobs)?);
    }
    match fmt {
        Format::Json => print_json(&reports),
        Format::Csv => csv_out(
            &["suite", "n", "checks", "failures"],
            reports
                .iter()
                .map(|r| vec![r.suite.clone(), r.n.to_string(), r.checks.to_string(), r.failure_count.to_string()]),
        ),
        Format::Text => {
            for r in &reports {
                print!("{r}");
            }
        }
    }
    Ok(if reports.iter().all(SuiteReport::passed) { Status::Ok } else { Status::Failed })
}
