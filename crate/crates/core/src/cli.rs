//! Command-line front end. `run` takes the arguments after the program name
//! and returns the exit code; `execute` does the same but hands back what
//! would have been written.

use std::fmt::Write as _;
use std::io::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::arith::{display_rational, fmt_rational};
use crate::error::{Error, Result};
use crate::f4chars::{build_all, columns, F4Group};
use crate::hecke::{f4_generic_degree, rep_by_name};
use crate::labels::{assign_labels, conversion_table, convert, convert_all, Convention, Scheme};
use crate::relative::{case_studies, fold_2e6, relative_system, show_vector, RelativeDatum};
use crate::report::{verify, SCHEMA};
use crate::rootsys::{parse_node, CartanType, RootSystem};
use crate::weylgrp::{conjugacy_classes, WeylGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Parser, Debug)]
#[command(
    name = "f4label",
    version,
    about = "Characters of W(F4), their labels, and related computations"
)]
struct Cli {
    /// Output format (default: text, json for verify).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write the output to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<std::path::PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum WeylView {
    Summary,
    Classes,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Positive roots of a root system.
    Roots {
        #[arg(long = "type")]
        ty: CartanType,
    },
    /// Weyl group summary or conjugacy classes.
    Weyl {
        #[arg(long = "type")]
        ty: CartanType,
        #[arg(value_enum, default_value = "summary")]
        view: WeylView,
    },
    /// The 25 irreducible characters of W(F4).
    Chartable {
        /// Read the labels in convention C or L.
        #[arg(long, default_value = "C")]
        convention: Convention,
    },
    /// Generic degree of one of the explicit Hecke representations.
    GenericDegree {
        #[arg(long)]
        rep: String,
        /// `a,b` for the specialisation (u, v) -> (q^a, q^b).
        #[arg(long, value_parser = parse_spec)]
        spec: Option<(i32, i32)>,
    },
    /// Relative root system of a Levi subset.
    Relative {
        #[arg(long)]
        ambient: CartanType,
        /// Comma-separated simple roots, e.g. a2,a3,a4,a5.
        #[arg(long, value_delimiter = ',', value_parser = parse_levi_node)]
        levi: Vec<usize>,
    },
    /// Folding by a graph automorphism (only 2E6).
    Fold {
        #[arg(long = "type")]
        ty: String,
    },
    /// Translate character labels between naming schemes.
    ConvertLabels {
        #[arg(long)]
        from: Scheme,
        #[arg(long)]
        to: Scheme,
        #[arg(long = "char")]
        character: Option<String>,
    },
    /// Run every check and print the findings report.
    Verify,
}

fn parse_spec(s: &str) -> std::result::Result<(i32, i32), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected a,b, got {s:?}"))?;
    let p = |x: &str| x.trim().parse::<i32>().map_err(|e| format!("{x:?}: {e}"));
    Ok((p(a)?, p(b)?))
}

fn parse_levi_node(s: &str) -> std::result::Result<usize, String> {
    parse_node(s).map_err(|e| e.to_string())
}

/// What a run produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses and runs without touching the process streams. `--out` is still
/// honoured.
pub fn execute<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv = std::iter::once("f4label".to_string()).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let (body, code) = match dispatch(&cli) {
        Ok(r) => r,
        Err(e) => {
            return Outcome {
                code: 1,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    };
    match &cli.out {
        Some(path) => match std::fs::write(path, &body) {
            Ok(()) => Outcome {
                code,
                stdout: String::new(),
                stderr: String::new(),
            },
            Err(e) => Outcome {
                code: 1,
                stdout: String::new(),
                stderr: format!("error: cannot write {}: {e}\n", path.display()),
            },
        },
        None => Outcome {
            code,
            stdout: body,
            stderr: String::new(),
        },
    }
}

/// Runs the command line and writes to the process streams.
pub fn run<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let o = execute(args);
    // a closed pipe is not worth a panic
    let _ = std::io::stdout().write_all(o.stdout.as_bytes());
    let _ = std::io::stderr().write_all(o.stderr.as_bytes());
    o.code
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serialisable");
    s.push('\n');
    s
}

fn no_latex(cmd: &str) -> Error {
    Error::Parse(format!("--format latex is not available for {cmd}"))
}

fn dispatch(cli: &Cli) -> Result<(String, i32)> {
    let fmt = cli.format;
    let text = fmt.unwrap_or(Format::Text);
    let out = match &cli.command {
        Command::Roots { ty } => roots(*ty, text)?,
        Command::Weyl { ty, view } => weyl(*ty, *view, text)?,
        Command::Chartable { convention } => chartable(*convention, text)?,
        Command::GenericDegree { rep, spec } => generic_degree(rep, *spec, text)?,
        Command::Relative { ambient, levi } => {
            let d = relative_system(*ambient, levi)?;
            datum_output(&d, text, "relative")?
        }
        Command::Fold { ty } => {
            let t = ty.trim_start_matches('²').trim_start_matches('2');
            if !t.eq_ignore_ascii_case("E6") || !(ty.starts_with('2') || ty.starts_with('²')) {
                return Err(Error::UnsupportedType(format!(
                    "folding {ty}; only 2E6 is available"
                )));
            }
            datum_output(&fold_2e6()?, text, "fold")?
        }
        Command::ConvertLabels {
            from,
            to,
            character,
        } => convert_labels(*from, *to, character.as_deref(), text)?,
        Command::Verify => {
            let f = verify();
            let code = if f.all_passed() { 0 } else { 2 };
            let body = match fmt.unwrap_or(Format::Json) {
                Format::Json => to_json(&f),
                Format::Text => {
                    let mut s = String::new();
                    for c in &f.checks {
                        let mark = if c.passed { "ok  " } else { "FAIL" };
                        writeln!(s, "[{mark}] {:<18} {}: {}", c.id, c.description, c.detail)
                            .unwrap();
                    }
                    for d in &f.discrepancies {
                        writeln!(
                            s,
                            "[note] {:?} {}: claimed {}, computed {} (alternate {}), {:?}",
                            d.case,
                            d.claim.subject,
                            d.claim.claimed,
                            d.claim.computed,
                            d.claim.computed_alternate,
                            d.claim.status
                        )
                        .unwrap();
                    }
                    s
                }
                Format::Latex => return Err(no_latex("verify")),
            };
            return Ok((body, code));
        }
    };
    Ok((out, 0))
}

fn roots(t: CartanType, fmt: Format) -> Result<String> {
    let sys = RootSystem::build(t)?;
    let pos = sys.positive_roots();
    Ok(match fmt {
        Format::Json => to_json(&json!({
            "schema": SCHEMA,
            "type": t,
            "num_roots": sys.roots().len(),
            "cartan": sys.ambient().cartan,
            "positive_roots": pos.iter().map(|r| json!({
                "coords": r.coords,
                "height": r.height(),
                "sq_length": fmt_rational(&r.sq_length),
            })).collect::<Vec<_>>(),
        })),
        Format::Text => {
            let mut s = format!(
                "{t}: {} positive roots, {} in all\n",
                pos.len(),
                sys.roots().len()
            );
            for r in pos {
                let c: Vec<String> = r.coords.iter().map(|x| x.to_string()).collect();
                writeln!(
                    s,
                    "{:>3}  {:>4}  {}",
                    r.height(),
                    display_rational(&r.sq_length),
                    c.join(" ")
                )
                .unwrap();
            }
            s
        }
        Format::Latex => return Err(no_latex("roots")),
    })
}

fn weyl(t: CartanType, view: WeylView, fmt: Format) -> Result<String> {
    let g = WeylGroup::new(t)?;
    let en = g.enumerate()?;
    let word = |w: &[usize]| -> String {
        if w.is_empty() {
            "1".into()
        } else {
            w.iter()
                .map(|i| format!("s{i}"))
                .collect::<Vec<_>>()
                .join(" ")
        }
    };
    match view {
        WeylView::Summary => {
            let all: Vec<usize> = (1..=g.rank()).collect();
            let w0 = g.longest_element(&all)?;
            let w0w = w0.word()?.clone();
            Ok(match fmt {
                Format::Json => to_json(&json!({
                    "schema": SCHEMA,
                    "type": t,
                    "order": en.len(),
                    "poincare": en.poincare_series(),
                    "longest_element": w0w,
                })),
                Format::Text => format!(
                    "W({t}): order {}\nPoincaré series: {}\nlongest element ({} letters): {}\n",
                    en.len(),
                    en.poincare_series(),
                    w0w.len(),
                    word(&w0w)
                ),
                Format::Latex => return Err(no_latex("weyl")),
            })
        }
        WeylView::Classes => {
            let c = conjugacy_classes(&g, &en)?;
            Ok(match fmt {
                Format::Json => to_json(&json!({
                    "schema": SCHEMA,
                    "type": t,
                    "order": en.len(),
                    "classes": (0..c.len()).map(|k| json!({
                        "rep": c.reps[k],
                        "size": c.sizes[k],
                        "square": c.power_map[k],
                    })).collect::<Vec<_>>(),
                })),
                Format::Text => {
                    let mut s = format!("W({t}): {} classes\n", c.len());
                    for k in 0..c.len() {
                        writeln!(
                            s,
                            "{k:>3}  {:>5}  sq -> {:>2}  {}",
                            c.sizes[k],
                            c.power_map[k],
                            word(&c.reps[k])
                        )
                        .unwrap();
                    }
                    s
                }
                Format::Latex => return Err(no_latex("weyl")),
            })
        }
    }
}

fn chartable(conv: Convention, fmt: Format) -> Result<String> {
    let g = F4Group::get();
    let chars = build_all()?;
    let labels = assign_labels(conv)?;
    let conv_name = match conv {
        Convention::C => "C",
        Convention::L => "L",
    };
    Ok(match fmt {
        Format::Json => to_json(&json!({
            "schema": SCHEMA,
            "convention": conv_name,
            "classes": (0..g.num_classes()).map(|k| json!({
                "rep": g.rep(k),
                "size": g.classes.sizes[k],
            })).collect::<Vec<_>>(),
            "table_columns": g.table_columns(),
            "characters": chars.iter().zip(&labels).map(|(c, l)| json!({
                "kondo": l.kondo,
                "carter": l.carter,
                "alias": l.kondo.alias(),
                "internal": c.kondo,
                "construction": c.construction,
                "degree": c.degree,
                "b": c.b_invariant,
                "a": crate::labels::row_by_kondo(l.kondo).map(|r| r.a_value),
                "fake_degree": c.fake_degree.to_string(),
                "columns": columns(g, &c.values),
                "values": c.values,
            })).collect::<Vec<_>>(),
        })),
        Format::Text => {
            let mut s =
                format!("W(F4), convention ({conv_name}); columns d, τ, aτ then all 25 classes\n");
            for (c, l) in chars.iter().zip(&labels) {
                let [x, y, z] = columns(g, &c.values);
                let a = crate::labels::row_by_kondo(l.kondo)
                    .map(|r| r.a_value)
                    .unwrap_or(0);
                let vals: Vec<String> = c.values.iter().map(|v| format!("{v:>3}")).collect();
                writeln!(
                    s,
                    "{:<5} {:<10} a={:<2} {:>3} {:>3} {:>3} |{}",
                    l.kondo.to_string(),
                    l.carter.to_string(),
                    a,
                    x,
                    y,
                    z,
                    vals.join("")
                )
                .unwrap();
            }
            s
        }
        Format::Latex => {
            let mut s = String::from(
                "\\begin{array}{|ccc|rrr|}\\hline\n n_j & \\phi_{d,b} & a_\\phi & d,a & \\tau,\\tau\\sigma & a\\tau \\\\ \\hline\n",
            );
            for (c, l) in chars.iter().zip(&labels) {
                let [x, y, z] = columns(g, &c.values);
                let a = crate::labels::row_by_kondo(l.kondo)
                    .map(|r| r.a_value)
                    .unwrap_or(0);
                writeln!(
                    s,
                    " {} & {} & {a} & {x} & {y} & {z} \\\\",
                    l.kondo,
                    l.carter.latex()
                )
                .unwrap();
            }
            s.push_str("\\hline\\end{array}\n");
            s
        }
    })
}

fn generic_degree(rep: &str, spec: Option<(i32, i32)>, fmt: Format) -> Result<String> {
    rep_by_name(rep)?;
    let gd = f4_generic_degree(rep)?;
    let spec_out = match spec {
        None => None,
        Some((a, b)) => {
            let r = gd.value.specialize(a, b)?;
            let (c, e) = r.lowest_term()?;
            Some((a, b, r, c, e))
        }
    };
    Ok(match fmt {
        Format::Json => to_json(&json!({
            "schema": SCHEMA,
            "rep": gd.rep,
            "numerator": gd.value.num,
            "denominator": gd.value.den,
            "numerator_text": gd.value.num.to_string(),
            "denominator_text": gd.value.den.to_string(),
            "specialisation": spec_out.as_ref().map(|(a, b, r, c, e)| json!({
                "spec": [a, b],
                "numerator": r.num,
                "denominator": r.den,
                "value": r.to_string(),
                "lowest_term": { "coefficient": fmt_rational(c), "exponent": e },
            })),
        })),
        Format::Text => {
            let mut s = format!(
                "D_{{{}}} = ({}) / ({})\n",
                gd.rep, gd.value.num, gd.value.den
            );
            if let Some((a, b, r, c, e)) = &spec_out {
                writeln!(s, "(u,v) -> (q^{a}, q^{b}): {r}").unwrap();
                writeln!(
                    s,
                    "lowest term: {}",
                    crate::arith::UniPoly::monomial(c.clone(), *e)
                )
                .unwrap();
            }
            s
        }
        Format::Latex => return Err(no_latex("generic-degree")),
    })
}

fn datum_output(d: &RelativeDatum, fmt: Format, cmd: &str) -> Result<String> {
    // a configuration that is one of the case studies also gets its comparison
    let case = case_studies().into_iter().find(|c| {
        c.datum.ambient == d.ambient
            && serde_json::to_string(&c.datum.origin).ok() == serde_json::to_string(&d.origin).ok()
    });
    let verification = json!({
        "axioms_hold": d.axioms_hold(),
        "case_study": case.as_ref().map(|c| json!({
            "name": c.name,
            "passed": c.passed(),
            "failures": c.failures,
        })),
    });
    Ok(match fmt {
        Format::Json => to_json(&json!({
            "schema": SCHEMA,
            "datum": d,
            "verification": verification,
        })),
        Format::Text => {
            let mut s = format!(
                "{} -> {} ({} relative roots)\n",
                match &d.origin {
                    crate::relative::Origin::Levi(l) => format!(
                        "{} ⊇ {{{}}}",
                        d.ambient,
                        l.iter()
                            .map(|i| format!("α{i}"))
                            .collect::<Vec<_>>()
                            .join(",")
                    ),
                    crate::relative::Origin::Folding { .. } => format!("²{}", d.ambient),
                },
                d.rel_type,
                d.num_roots
            );
            for n in &d.nodes {
                writeln!(
                    s,
                    "  {:<10} {:<6} |·|² = {:<4} λ = {:<20} {} ; ŝ = {}",
                    n.label,
                    format!("{:?}", n.length_class).to_lowercase(),
                    display_rational(&n.sq_length),
                    n.weight.show(),
                    show_vector(&n.vector),
                    n.word
                        .iter()
                        .map(|i| i.to_string())
                        .collect::<Vec<_>>()
                        .join("")
                )
                .unwrap();
            }
            writeln!(s, "  Cartan matrix: {:?}", d.rel_cartan).unwrap();
            writeln!(s, "  orders of ŝ_α ŝ_β: {:?}", d.product_orders).unwrap();
            writeln!(
                s,
                "  reflection axioms: {}",
                if d.axioms_hold() { "hold" } else { "FAIL" }
            )
            .unwrap();
            if let Some(c) = case {
                writeln!(
                    s,
                    "  case study {}: {}",
                    c.name,
                    if c.passed() {
                        "as expected"
                    } else {
                        "MISMATCH"
                    }
                )
                .unwrap();
            }
            s
        }
        Format::Latex => return Err(no_latex(cmd)),
    })
}

fn convert_labels(from: Scheme, to: Scheme, ch: Option<&str>, fmt: Format) -> Result<String> {
    if let Some(c) = ch {
        let out = convert(from, to, c)?;
        return Ok(match fmt {
            Format::Json => to_json(&json!({ "schema": SCHEMA, "input": c, "output": out })),
            Format::Text => format!("{out}\n"),
            Format::Latex => match out {
                crate::labels::AnyLabel::Carter(x) => format!("{}\n", x.latex()),
                k => format!("{k}\n"),
            },
        });
    }
    let rows = if from == Scheme::Carter && to == Scheme::Lusztig {
        conversion_table()?
            .into_iter()
            .map(|(c, k)| {
                (
                    crate::labels::AnyLabel::Carter(c),
                    crate::labels::AnyLabel::Kondo(k),
                )
            })
            .collect()
    } else {
        convert_all(from, to)?
    };
    Ok(match fmt {
        Format::Json => to_json(&json!({
            "schema": SCHEMA,
            "rows": rows.iter().map(|(a, b)| json!([a, b])).collect::<Vec<_>>(),
        })),
        Format::Text => {
            let mut s = String::new();
            for (a, b) in &rows {
                writeln!(s, "{:<10} {}", a.to_string(), b).unwrap();
            }
            s
        }
        Format::Latex => {
            let show = |l: &crate::labels::AnyLabel| match l {
                crate::labels::AnyLabel::Carter(c) => c.latex(),
                k => k.to_string(),
            };
            let mut s = String::new();
            for chunk in rows.chunks(13) {
                writeln!(
                    s,
                    "\\begin{{array}}{{|{}|}}\\hline",
                    "c".repeat(chunk.len())
                )
                .unwrap();
                let top: Vec<String> = chunk.iter().map(|r| show(&r.0)).collect();
                let bot: Vec<String> = chunk.iter().map(|r| show(&r.1)).collect();
                writeln!(
                    s,
                    "{} \\\\\n{} \\\\ \\hline\\end{{array}}",
                    top.join(" & "),
                    bot.join(" & ")
                )
                .unwrap();
            }
            s
        }
    })
}
