//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification check fails, 2 on a usage
//! error (bad partition, or a non-hook where a closed form needs a hook).

use std::ffi::OsString;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::{tanisaki_generators, HookSplit};
use crate::oracle::{default_dmax, verify_dimension, verify_hook};
use crate::partition::{Hook, Partition};
use crate::poly::MvPoly;
use crate::series::{
    betti_table, cauchy_identity_check, hilbert_hook, hilbert_via_factorization,
    hockey_stick_check, poincare_hook, regularity_from_table, regularity_hook,
};

#[derive(Debug, Clone, Parser)]
#[command(name = "deconcini", version, about = "De Concini-Procesi ideals of hooks")]
pub struct CliRequest {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Generators of I_mu (the hook split J + E for hooks).
    Gens(ShapeArgs),
    /// Bigraded Poincare series P(q, t).
    Poincare(ShapeArgs),
    /// Graded Betti diagram.
    Betti(ShapeArgs),
    /// Hilbert series h(q) of R/I.
    Hilbert(ShapeArgs),
    /// Castelnuovo-Mumford regularity.
    Reg(ShapeArgs),
    /// Alexander dual of the monomial part J.
    Dual(ShapeArgs),
    /// Check the closed forms against the exact oracle.
    Verify(VerifyArgs),
    /// Cauchy t-binomial and hockey-stick identities.
    Identities(IdentityArgs),
}

#[derive(Debug, Clone, Args)]
#[group(skip)]
#[command(group(ArgGroup::new("shape").required(true).args(["hook", "mu"])))]
pub struct ShapeArgs {
    /// Hook (a | b) given as arm and leg.
    #[arg(long, num_args = 2, value_names = ["A", "B"])]
    pub hook: Option<Vec<usize>>,
    /// Partition such as 3,1 (detected as a hook when it is one).
    #[arg(long)]
    pub mu: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Truncation degree for series and oracle checks.
    #[arg(long)]
    pub max_degree: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub shape: ShapeArgs,
    /// Only compare the oracle's total dimension with the multinomial.
    #[arg(long)]
    pub dimension_only: bool,
}

#[derive(Debug, Clone, Args)]
pub struct IdentityArgs {
    /// Largest n for the t-binomial identity.
    #[arg(long, default_value_t = 12)]
    pub max_n: usize,
    /// Largest n for the binomial sum identity.
    #[arg(long, default_value_t = 20)]
    pub max_binomial_n: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    M2,
}

/// Exit status plus everything written to stdout and stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { status: 0, stdout, stderr: String::new() }
    }

    fn checked(pass: bool, stdout: String) -> Self {
        Outcome { status: if pass { 0 } else { 1 }, stdout, stderr: String::new() }
    }

    fn usage(message: impl ToString) -> Self {
        Outcome { status: 2, stdout: String::new(), stderr: format!("error: {}\n", message.to_string()) }
    }
}

#[derive(Debug, Clone)]
enum Shape {
    Hook(Hook),
    General(Partition),
}

impl ShapeArgs {
    fn resolve(&self) -> Result<Shape> {
        let mu = match (&self.hook, &self.mu) {
            (Some(ab), _) => return Ok(Shape::Hook(Hook::new(ab[0], ab[1]))),
            (None, Some(s)) => s.parse::<Partition>()?,
            (None, None) => return Err(Error::NotAPartition("no shape given".into())),
        };
        Ok(match mu.as_hook() {
            Some(h) => Shape::Hook(h),
            None => Shape::General(mu),
        })
    }

    fn hook(&self) -> Result<Hook> {
        match self.resolve()? {
            Shape::Hook(h) => Ok(h),
            Shape::General(mu) => Err(Error::NotAHook(mu.to_string())),
        }
    }
}

/// Parses arguments (program name first) and runs the request.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match CliRequest::try_parse_from(args) {
        Ok(req) => run(&req),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome { status: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome::ok(text)
            }
        }
    }
}

pub fn run(req: &CliRequest) -> Outcome {
    let result = match &req.command {
        Command::Gens(s) => gens(s),
        Command::Poincare(s) => poincare(s),
        Command::Betti(s) => betti(s),
        Command::Hilbert(s) => hilbert(s),
        Command::Reg(s) => reg(s),
        Command::Dual(s) => dual(s),
        Command::Verify(v) => verify(v),
        Command::Identities(i) => Ok(identities(i)),
    };
    result.unwrap_or_else(Outcome::usage)
}

fn json_line<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable") + "\n"
}

fn poly_strings(polys: &[MvPoly]) -> Vec<String> {
    polys.iter().map(ToString::to_string).collect()
}

fn m2_ideal(n: usize, polys: &[MvPoly]) -> String {
    format!(
        "R = QQ[x1..x{n}]\nI = ideal({})\n",
        polys.iter().map(MvPoly::to_m2_string).join(", ")
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GensJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hook: Option<[usize; 2]>,
    pub partition: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub monomials: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symmetric: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<String>>,
}

fn gens(s: &ShapeArgs) -> Result<Outcome> {
    let out = match s.resolve()? {
        Shape::Hook(h) => {
            let split = HookSplit::new(h);
            let monomials = split.monomial_part.to_polys();
            match s.format {
                Format::Text => {
                    let mut out = format!("{} = {h}, n = {}\n", h.partition(), h.n());
                    out.push_str(&format!(
                        "J: {} squarefree monomials of degree {}\n",
                        monomials.len(),
                        h.b + 1
                    ));
                    for m in &monomials {
                        out.push_str(&format!("  {m}\n"));
                    }
                    out.push_str(&format!("E: {} elementary symmetric polynomials\n", h.b));
                    for (i, e) in split.symmetric_part.iter().enumerate() {
                        out.push_str(&format!("  e_{} = {e}\n", i + 1));
                    }
                    out
                }
                Format::Json => json_line(&GensJson {
                    hook: Some([h.a, h.b]),
                    partition: h.partition().parts().to_vec(),
                    monomials: Some(poly_strings(&monomials)),
                    symmetric: Some(poly_strings(&split.symmetric_part)),
                    generators: None,
                }),
                Format::M2 => m2_ideal(h.n(), &split.flatten()),
            }
        }
        Shape::General(mu) => {
            let g = tanisaki_generators(&mu);
            match s.format {
                Format::Text => {
                    let mut out = format!("{mu}, n = {}\n", mu.n());
                    out.push_str(&format!("C: {} generators\n", g.len()));
                    for p in &g {
                        out.push_str(&format!("  {p}\n"));
                    }
                    out
                }
                Format::Json => json_line(&GensJson {
                    hook: None,
                    partition: mu.parts().to_vec(),
                    monomials: None,
                    symmetric: None,
                    generators: Some(poly_strings(&g)),
                }),
                Format::M2 => m2_ideal(mu.n(), &g),
            }
        }
    };
    Ok(Outcome::ok(out))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoincareJson {
    pub hook: [usize; 2],
    /// `(i, j, c)` for each term `c q^i t^j`.
    pub terms: Vec<(u32, u32, serde_json::Number)>,
}

fn poincare(s: &ShapeArgs) -> Result<Outcome> {
    let h = s.hook()?;
    let p = poincare_hook(h);
    let out = match s.format {
        Format::Text => p.render() + "\n",
        Format::M2 => p.render_m2() + "\n",
        Format::Json => json_line(&PoincareJson {
            hook: [h.a, h.b],
            terms: p
                .terms()
                .map(|(i, j, c)| {
                    let n: serde_json::Number = c.to_string().parse().expect("integer");
                    (i, j, n)
                })
                .collect(),
        }),
    };
    Ok(Outcome::ok(out))
}

fn betti(s: &ShapeArgs) -> Result<Outcome> {
    let h = s.hook()?;
    let table = betti_table(&poincare_hook(h))?;
    let out = match s.format {
        Format::Text => table.render_text(),
        Format::M2 => table.render_m2(),
        Format::Json => json_line(&table.to_json()),
    };
    Ok(Outcome::ok(out))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertJson {
    pub hook: [usize; 2],
    /// `coefficients[d] = dim (R/I)_d`.
    pub coefficients: Vec<serde_json::Number>,
}

fn hilbert(s: &ShapeArgs) -> Result<Outcome> {
    let h = s.hook()?;
    let series = match s.max_degree {
        Some(d) => hilbert_via_factorization(h, d)?,
        None => hilbert_hook(h),
    };
    let out = match s.format {
        Format::Text => format!("{series}\n"),
        Format::M2 => format!("{}\n", series.render("T").replace(' ', "")),
        Format::Json => json_line(&HilbertJson {
            hook: [h.a, h.b],
            coefficients: series
                .coeffs()
                .iter()
                .map(|c| c.to_string().parse().expect("integer"))
                .collect(),
        }),
    };
    Ok(Outcome::ok(out))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegJson {
    pub hook: [usize; 2],
    pub closed_form: usize,
    pub from_table: usize,
}

fn reg(s: &ShapeArgs) -> Result<Outcome> {
    let h = s.hook()?;
    let closed_form = regularity_hook(h);
    let from_table = regularity_from_table(&betti_table(&poincare_hook(h))?);
    let out = match s.format {
        Format::Text | Format::M2 => {
            format!("closed form: {closed_form}\nfrom Betti table: {from_table}\n")
        }
        Format::Json => json_line(&RegJson { hook: [h.a, h.b], closed_form, from_table }),
    };
    Ok(Outcome::checked(closed_form == from_table, out))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualJson {
    pub hook: [usize; 2],
    pub generators: Vec<String>,
}

fn dual(s: &ShapeArgs) -> Result<Outcome> {
    let h = s.hook()?;
    let dual = HookSplit::new(h).monomial_part.alexander_dual()?;
    let gens = poly_strings(&dual.to_polys());
    let out = match s.format {
        Format::Text => {
            let mut out = format!("{} generators of degree {}\n", gens.len(), h.n() - h.b);
            for g in &gens {
                out.push_str(&format!("  {g}\n"));
            }
            out
        }
        Format::M2 => format!("R = QQ[x1..x{}]\nmonomialIdeal({})\n", h.n(), gens.join(", ")),
        Format::Json => json_line(&DualJson { hook: [h.a, h.b], generators: gens }),
    };
    Ok(Outcome::ok(out))
}

fn verify(v: &VerifyArgs) -> Result<Outcome> {
    let report = if v.dimension_only {
        let mu = match v.shape.resolve()? {
            Shape::Hook(h) => h.partition(),
            Shape::General(mu) => mu,
        };
        // the coinvariant algebra, the largest quotient, vanishes above n(n-1)/2
        let n = mu.n();
        let cap = v.shape.max_degree.unwrap_or(n * (n - 1) / 2 + 1);
        verify_dimension(&mu, cap)?
    } else {
        let h = v.shape.hook()?;
        verify_hook(h, v.shape.max_degree.unwrap_or(default_dmax(h.b)))?
    };
    let out = match v.shape.format {
        Format::Json => json_line(&report),
        Format::Text | Format::M2 => report.render_text(),
    };
    Ok(Outcome::checked(report.all_passed(), out))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityJson {
    pub cauchy: Vec<(usize, bool)>,
    pub binomial_sum: Vec<(usize, bool)>,
}

fn identities(args: &IdentityArgs) -> Outcome {
    let report = IdentityJson {
        cauchy: (0..=args.max_n).map(|n| (n, cauchy_identity_check(n))).collect(),
        binomial_sum: (0..=args.max_binomial_n).map(|n| (n, hockey_stick_check(n))).collect(),
    };
    let pass = report.cauchy.iter().chain(&report.binomial_sum).all(|&(_, ok)| ok);
    let out = match args.format {
        Format::Json => json_line(&report),
        Format::Text | Format::M2 => {
            let line = |name: &str, results: &[(usize, bool)]| {
                let failed: Vec<String> =
                    results.iter().filter(|r| !r.1).map(|r| r.0.to_string()).collect();
                let max = results.last().map_or(0, |r| r.0);
                if failed.is_empty() {
                    format!("[PASS] {name}, n = 0..={max}\n")
                } else {
                    format!("[FAIL] {name}, n = {}\n", failed.join(", "))
                }
            };
            line("t-binomial theorem", &report.cauchy) + &line("binomial sum", &report.binomial_sum)
        }
    };
    Outcome::checked(pass, out)
}
