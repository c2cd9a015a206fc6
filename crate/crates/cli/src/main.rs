//! skewmult: exact skew polynomial arithmetic from the command line.
//!
//! Every subcommand maps 1:1 to a library operation. The coefficient ring
//! is chosen by `--ring` (see [`skewmult_core::text::parse_ring`] for the
//! spec grammar); polynomial, element, and sequence positionals use the
//! shared expression grammar. Results print in canonical text form, so any
//! printed polynomial, element, or bracketed list re-parses to the same
//! object. Exit status: 0 on success (booleans print `true`/`false`), 1 on
//! a domain error, 2 on a parse or usage error.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use skewmult_core::error::{Error, Result};
use skewmult_core::interp::{build_vandermonde, hermite_interpolate};
use skewmult_core::multiplicity::{
    conjclass_minpoly, extend_multseq, hasse_derivative, mult_check_1, mult_check_2,
    mult_on_class_check, taylor_expand, validate_multseq,
};
use skewmult_core::poly::{PointEntry, PointSet, SkewPolyRing};
use skewmult_core::ring::SkewRing;
use skewmult_core::text::{self, AnyRing};

#[derive(Parser)]
#[command(name = "skewmult", version, about = "Skew polynomial arithmetic over division rings")]
struct Cli {
    /// Coefficient ring spec: gf(p^m; mod=...; frob=s) | quat | gaussian |
    /// ratfun(p; c=...)
    #[arg(long)]
    ring: String,

    /// Output mode: plain text lines or one JSON object per invocation.
    #[arg(long, value_enum, default_value_t = Output::Plain)]
    output: Output,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Output {
    Plain,
    Jsonl,
}

#[derive(Subcommand)]
enum Cmd {
    /// Right division F = Q*P + R: prints the quotient, then the remainder.
    Divr { f: String, p: String },
    /// Left division F = P*Q + R (requires an invertible twist).
    Divl { f: String, p: String },
    /// Evaluate F at a point.
    Eval { f: String, a: String },
    /// Remainder of F under right division by a modulus of degree >= 1.
    Evalhigh { f: String, p: String },
    /// Greatest common right divisor (monic).
    Gcrd { f: String, g: String },
    /// Least common left multiple (monic).
    Lclm { f: String, g: String },
    /// Minimal polynomial vanishing on a point set. Each entry is an
    /// element literal or a sequence literal; (x-a)^r data is the constant
    /// sequence [a; ...; a] of length r.
    Minpoly {
        #[arg(required = true)]
        entries: Vec<String>,
    },
    /// Whether a point set is P-independent.
    Pindep {
        #[arg(required = true)]
        entries: Vec<String>,
    },
    /// Hasse derivative of F along a point tuple.
    Hasse { f: String, seq: String },
    /// Taylor expansion of F along a point tuple: prints the final
    /// quotient, then the derivative coefficients (ascending prefixes).
    Taylor { f: String, seq: String },
    /// Whether (x-a)^r right-divides F.
    Multcheck1 { f: String, a: String, r: usize },
    /// Whether the sequence polynomial of a valid multiplicity sequence
    /// right-divides F (the sequence is validated first).
    Multcheck2 { f: String, seq: String },
    /// Whether a point tuple is a valid multiplicity sequence.
    Seqvalidate { seq: String },
    /// Extend a valid multiplicity sequence by one more point.
    Seqextend { seq: String },
    /// Confluent Vandermonde matrix of order N on the given tuples: prints
    /// one bracketed row per line.
    Vandermonde {
        n: usize,
        #[arg(required = true)]
        seqs: Vec<String>,
    },
    /// Hermite interpolation from SEQ VALUES argument pairs, where VALUES
    /// lists one target per prefix of SEQ. Non-constant tuples are
    /// validated first.
    #[command(name = "interp")]
    Interp {
        #[arg(required = true)]
        args: Vec<String>,
    },
    /// All zeros of F (enumerable rings only), in enumeration order.
    Zeros { f: String },
    /// Minimal polynomial of the conjugacy class of a point.
    Classpoly { a: String },
    /// Whether every element of the class of `a` has multiplicity >= r as
    /// a zero of F.
    Classcheck { f: String, a: String, r: usize },
    /// Factor the minimal polynomial of a P-independent point set into
    /// linear terms: prints the points in peeling order.
    Factor {
        #[arg(required = true)]
        entries: Vec<String>,
    },
}

impl Cmd {
    fn name(&self) -> &'static str {
        match self {
            Cmd::Divr { .. } => "divr",
            Cmd::Divl { .. } => "divl",
            Cmd::Eval { .. } => "eval",
            Cmd::Evalhigh { .. } => "evalhigh",
            Cmd::Gcrd { .. } => "gcrd",
            Cmd::Lclm { .. } => "lclm",
            Cmd::Minpoly { .. } => "minpoly",
            Cmd::Pindep { .. } => "pindep",
            Cmd::Hasse { .. } => "hasse",
            Cmd::Taylor { .. } => "taylor",
            Cmd::Multcheck1 { .. } => "multcheck1",
            Cmd::Multcheck2 { .. } => "multcheck2",
            Cmd::Seqvalidate { .. } => "seqvalidate",
            Cmd::Seqextend { .. } => "seqextend",
            Cmd::Vandermonde { .. } => "vandermonde",
            Cmd::Interp { .. } => "interp",
            Cmd::Zeros { .. } => "zeros",
            Cmd::Classpoly { .. } => "classpoly",
            Cmd::Classcheck { .. } => "classcheck",
            Cmd::Factor { .. } => "factor",
        }
    }
}

/// One command's result, carrying both render targets.
struct Rendered {
    plain: Vec<String>,
    json: Value,
}

impl Rendered {
    fn line(text: String) -> Self {
        Rendered { json: json!(text), plain: vec![text] }
    }

    fn flag(b: bool) -> Self {
        Rendered { plain: vec![b.to_string()], json: json!(b) }
    }

    fn list(items: Vec<String>) -> Self {
        Rendered {
            plain: vec![format!("[{}]", items.join("; "))],
            json: json!(items),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ring = match text::parse_ring(&cli.ring) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error in --ring: {e}");
            return ExitCode::from(2);
        }
    };
    let rendered = match ring {
        AnyRing::Finite(r) => run(&SkewPolyRing::new(r), &cli.cmd),
        AnyRing::Quat(r) => run(&SkewPolyRing::new(r), &cli.cmd),
        AnyRing::Gauss(r) => run(&SkewPolyRing::new(r), &cli.cmd),
        AnyRing::RatFun(r) => run(&SkewPolyRing::new(r), &cli.cmd),
    };
    match rendered {
        Ok(out) => {
            match cli.output {
                Output::Plain => {
                    for line in &out.plain {
                        println!("{line}");
                    }
                }
                Output::Jsonl => {
                    println!("{}", json!({ "op": cli.cmd.name(), "result": out.json }));
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Parse { .. } => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn run<R: SkewRing>(ring: &SkewPolyRing<R>, cmd: &Cmd) -> Result<Rendered> {
    let elem = |s: &str| text::parse_element(ring, s);
    let poly = |s: &str| text::parse_poly(ring, s);
    let fmt_elem = |a: &R::Elem| ring.ring().format_elem(a);
    let fmt_list = |items: &[R::Elem]| items.iter().map(fmt_elem).collect::<Vec<_>>();

    match cmd {
        Cmd::Divr { f, p } => {
            let (q, r) = ring.right_divmod(&poly(f)?, &poly(p)?)?;
            Ok(Rendered {
                plain: vec![ring.format_poly(&q), ring.format_poly(&r)],
                json: json!({ "quotient": ring.format_poly(&q), "remainder": ring.format_poly(&r) }),
            })
        }
        Cmd::Divl { f, p } => {
            let (q, r) = ring.left_divmod(&poly(f)?, &poly(p)?)?;
            Ok(Rendered {
                plain: vec![ring.format_poly(&q), ring.format_poly(&r)],
                json: json!({ "quotient": ring.format_poly(&q), "remainder": ring.format_poly(&r) }),
            })
        }
        Cmd::Eval { f, a } => Ok(Rendered::line(fmt_elem(&ring.eval_point(&poly(f)?, &elem(a)?)))),
        Cmd::Evalhigh { f, p } => {
            Ok(Rendered::line(ring.format_poly(&ring.eval_high(&poly(f)?, &poly(p)?)?)))
        }
        Cmd::Gcrd { f, g } => Ok(Rendered::line(ring.format_poly(&ring.gcrd(&poly(f)?, &poly(g)?)?))),
        Cmd::Lclm { f, g } => Ok(Rendered::line(ring.format_poly(&ring.lclm(&poly(f)?, &poly(g)?)?))),
        Cmd::Minpoly { entries } => {
            let set = parse_point_set(ring, entries)?;
            Ok(Rendered::line(ring.format_poly(&skewmult_core::poly::minimal_poly(ring, &set)?)))
        }
        Cmd::Pindep { entries } => {
            let set = parse_point_set(ring, entries)?;
            Ok(Rendered::flag(skewmult_core::poly::is_p_independent(ring, &set)?))
        }
        Cmd::Hasse { f, seq } => {
            let pts = text::parse_element_list(ring, seq)?;
            Ok(Rendered::line(fmt_elem(&hasse_derivative(ring, &poly(f)?, &pts)?)))
        }
        Cmd::Taylor { f, seq } => {
            let pts = text::parse_element_list(ring, seq)?;
            let (g, coeffs) = taylor_expand(ring, &poly(f)?, &pts)?;
            let coeffs = fmt_list(&coeffs);
            Ok(Rendered {
                plain: vec![ring.format_poly(&g), format!("[{}]", coeffs.join("; "))],
                json: json!({ "quotient": ring.format_poly(&g), "coeffs": coeffs }),
            })
        }
        Cmd::Multcheck1 { f, a, r } => {
            Ok(Rendered::flag(mult_check_1(ring, &poly(f)?, &elem(a)?, *r)?))
        }
        Cmd::Multcheck2 { f, seq } => {
            let seq = text::parse_seq(ring, seq)?.validated(ring)?;
            Ok(Rendered::flag(mult_check_2(ring, &poly(f)?, &seq)?))
        }
        Cmd::Seqvalidate { seq } => {
            let pts = text::parse_element_list(ring, seq)?;
            Ok(Rendered::flag(validate_multseq(ring, &pts)?))
        }
        Cmd::Seqextend { seq } => {
            let seq = text::parse_seq(ring, seq)?.validated(ring)?;
            let extended = extend_multseq(ring, &seq)?;
            Ok(Rendered::list(fmt_list(extended.points())))
        }
        Cmd::Vandermonde { n, seqs } => {
            let seqs = seqs
                .iter()
                .map(|s| text::parse_seq(ring, s))
                .collect::<Result<Vec<_>>>()?;
            let v = build_vandermonde(ring, &seqs, *n)?;
            let rows: Vec<Vec<String>> = v.matrix().iter().map(|row| fmt_list(row)).collect();
            Ok(Rendered {
                plain: rows.iter().map(|r| format!("[{}]", r.join("; "))).collect(),
                json: json!(rows),
            })
        }
        Cmd::Interp { args } => {
            if args.len() % 2 != 0 {
                return Err(Error::parse(0, "SEQ VALUES argument pairs"));
            }
            let mut seqs = Vec::new();
            let mut values = Vec::new();
            for pair in args.chunks(2) {
                let seq = text::parse_seq(ring, &pair[0])?;
                let constant = seq.points().iter().all(|a| a == seq.head());
                let seq = if constant { seq } else { seq.validated(ring)? };
                let targets = text::parse_element_list(ring, &pair[1])?;
                if targets.len() != seq.len() {
                    return Err(Error::DimensionMismatch(format!(
                        "{} targets for a tuple of length {}",
                        targets.len(),
                        seq.len()
                    )));
                }
                seqs.push(seq);
                values.extend(targets);
            }
            Ok(Rendered::line(ring.format_poly(&hermite_interpolate(ring, &seqs, &values)?)))
        }
        Cmd::Zeros { f } => Ok(Rendered::list(fmt_list(&ring.zero_set_brute(&poly(f)?)?))),
        Cmd::Classpoly { a } => {
            Ok(Rendered::line(ring.format_poly(&conjclass_minpoly(ring, &elem(a)?)?)))
        }
        Cmd::Classcheck { f, a, r } => {
            Ok(Rendered::flag(mult_on_class_check(ring, &poly(f)?, &elem(a)?, *r)?))
        }
        Cmd::Factor { entries } => {
            let set = parse_point_set(ring, entries)?;
            let factors = skewmult_core::multiplicity::factor_p_independent(ring, &set)?;
            Ok(Rendered::list(fmt_list(&factors)))
        }
    }
}

/// Point-set entries: a bracketed literal is a point tuple, anything else a
/// single point. Constant tuples [a; ...; a] describe (x-a)^r data.
fn parse_point_set<R: SkewRing>(
    ring: &SkewPolyRing<R>,
    entries: &[String],
) -> Result<PointSet<R>> {
    let parsed = entries
        .iter()
        .map(|raw| {
            if raw.trim_start().starts_with('[') {
                let pts = text::parse_element_list(ring, raw)?;
                if let [a] = pts.as_slice() {
                    return Ok(PointEntry::Simple(a.clone()));
                }
                if let Some(head) = pts.first() {
                    if pts.iter().all(|p| p == head) {
                        return Ok(PointEntry::Power(head.clone(), pts.len()));
                    }
                }
                // Mixed tuples only mean anything as multiplicity sequences.
                if !validate_multseq(ring, &pts)? {
                    return Err(Error::InvalidSequence);
                }
                Ok(PointEntry::Sequence(pts))
            } else {
                Ok(PointEntry::Simple(text::parse_element(ring, raw)?))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    PointSet::new(ring, parsed)
}
