//! Argument parsing and dispatch for the `cotor` binary.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use cotor_core::complex::{Bicomplex, Filtration, HochschildVariant};
use cotor_core::derived::{
    abrams_weibel_check, adjoined_homology, autoenvelope_check, coalgebra_hochschild, cohom, cotensor,
    cotensor_bicomodule, cotor, duality_check, flipping_check, hochschild_dims, injector_probe, injector_verdict,
    les_check, pseudo_coext, pseudo_coext_right, LesFunctor,
};
use cotor_core::fixtures;
use cotor_core::structure::{
    dualize_algebra, dualize_coalgebra, envelope, envelope_view_over, Bimodule, CoalgebraRef, Comod, FinAlgebra,
    FinCoalgebra, IsoWitness,
};
use cotor_core::{Bicomodule, FieldSpec, LeftComodule, RightComodule};

use crate::bundled::{bundle, BUNDLE_NAMES};
use crate::report::{Report, Table};
use crate::session::{Session, SessionError};

#[derive(Debug, Parser)]
#[command(name = "cotor", version, about = "Exact homological algebra of finite-dimensional coalgebras")]
pub struct Cli {
    /// Session file; defaults to the bundled fixtures named by --coalgebra
    #[arg(long, global = true)]
    pub session: Option<PathBuf>,
    /// Q or Fp:<p>; must match the session
    #[arg(long, global = true)]
    pub field: Option<String>,
    #[arg(long, global = true, default_value_t = 3)]
    pub max_degree: usize,
    #[arg(long, global = true, value_enum, default_value_t = Output::Table)]
    pub output: Output,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Table,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Variant {
    Cochain,
    Chain,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LesKind {
    Cotor,
    Coext,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Load and validate every object; without --session or --coalgebra, every bundle
    Validate {
        #[arg(long)]
        coalgebra: Option<String>,
    },
    /// Transpose dual of a coalgebra or an algebra
    Dual {
        #[arg(long, conflicts_with = "algebra", required_unless_present = "algebra")]
        coalgebra: Option<String>,
        #[arg(long)]
        algebra: Option<String>,
    },
    /// Enveloping coalgebra, and optionally the envelope views of a bicomodule
    Envelope {
        #[arg(long)]
        coalgebra: String,
        #[arg(long)]
        m: Option<String>,
    },
    /// Dimension of the cotensor product
    Cotensor {
        #[arg(long)]
        coalgebra: Option<String>,
        #[arg(long)]
        m: String,
        #[arg(long)]
        n: String,
    },
    /// Cotor dims from the cobar complex
    Cotor {
        #[arg(long)]
        coalgebra: Option<String>,
        #[arg(long)]
        m: String,
        #[arg(long)]
        n: String,
    },
    /// Dimension of h(X, M)
    Cohom {
        #[arg(long)]
        coalgebra: Option<String>,
        #[arg(long)]
        x: String,
        #[arg(long)]
        m: String,
    },
    /// Pseudo-coext dims
    Coext {
        #[arg(long)]
        coalgebra: Option<String>,
        #[arg(long)]
        x: String,
        #[arg(long)]
        m: String,
    },
    /// Adjoined homology of a coalgebra with coefficients in a bicomodule
    Adjoined {
        #[arg(long)]
        coalgebra: String,
        #[arg(long)]
        m: String,
    },
    /// Hochschild (co)homology of an algebra
    HhAlg {
        #[arg(long)]
        algebra: String,
        /// Coefficient bimodule; the regular bimodule when omitted
        #[arg(long)]
        bimodule: Option<String>,
        #[arg(long, value_enum, default_value_t = Variant::Cochain)]
        variant: Variant,
    },
    /// Hochschild cohomology of a coalgebra
    HhCoalg {
        #[arg(long)]
        coalgebra: String,
        /// Coefficient bicomodule; the regular bicomodule when omitted
        #[arg(long)]
        m: Option<String>,
    },
    /// Long exact sequence of a functor across a short exact sequence
    Les {
        #[arg(long)]
        coalgebra: Option<String>,
        #[arg(long)]
        ses: String,
        #[arg(long, value_enum)]
        functor: LesKind,
        #[arg(long)]
        against: String,
    },
    /// Spectral pages and total homology of the bundled bicomplexes
    Spectral {
        #[arg(long)]
        bicomplex: Option<String>,
    },
    /// Hochschild cohomology of the dual algebra against Cotor
    CheckAw {
        #[arg(long)]
        coalgebra: String,
        /// Left comodule argument
        #[arg(long)]
        m: String,
        /// Right comodule argument
        #[arg(long)]
        n: String,
    },
    /// Hochschild cohomology against adjoined homology of a claimed order
    CheckDuality {
        #[arg(long)]
        coalgebra: String,
        #[arg(long)]
        m: String,
        #[arg(long)]
        order: usize,
    },
    /// Whether a witness identifies a coalgebra with its envelope
    CheckAutoenvelope {
        #[arg(long)]
        coalgebra: String,
        /// Witness key; the identity matrix when omitted
        #[arg(long)]
        witness: Option<String>,
    },
    /// Spectral sequence of a flipping resolution
    CheckFlipping {
        #[arg(long)]
        coalgebra: Option<String>,
        #[arg(long)]
        resolution: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        c: String,
    },
    /// Exactness of h(X, −) across a short exact sequence
    ProbeInjector {
        #[arg(long)]
        coalgebra: Option<String>,
        #[arg(long)]
        x: String,
        #[arg(long)]
        ses: String,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Session(#[from] SessionError),
    #[error(transparent)]
    Core(#[from] cotor_core::Error),
    #[error("{0}")]
    Usage(String),
}

type Result<T> = std::result::Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

struct Ctx<'a> {
    cli: &'a Cli,
}

impl Ctx<'_> {
    /// The session file, or the bundle named by `coalgebra` (or the algebra bundle).
    fn open(&self, coalgebra: Option<&str>, algebra: bool) -> Result<Session> {
        let s = match (&self.cli.session, coalgebra) {
            (Some(path), _) => Session::load(path)?,
            (None, _) if algebra => bundle("algebras")?,
            (None, Some(name)) if BUNDLE_NAMES.contains(&name) => bundle(name)?,
            (None, Some(name)) => return Err(usage(format!("no bundled coalgebra `{name}`; pass --session"))),
            (None, None) => return Err(usage("pass --session or --coalgebra")),
        };
        if let Some(f) = &self.cli.field {
            let want = FieldSpec::parse(f)?;
            if want != s.field {
                return Err(usage(format!("--field {want} does not match the session field {}", s.field)));
            }
        }
        if let Some(name) = coalgebra {
            if s.coalgebra(name).is_none() {
                return Err(usage(format!("no coalgebra `{name}` in the session")));
            }
        }
        Ok(s)
    }
}

fn coalgebra(s: &Session, key: &str) -> Result<CoalgebraRef> {
    s.coalgebra(key).cloned().ok_or_else(|| usage(format!("no coalgebra `{key}`")))
}

fn algebra(s: &Session, key: &str) -> Result<FinAlgebra> {
    s.algebra(key).cloned().ok_or_else(|| usage(format!("no algebra `{key}`")))
}

fn comod(s: &Session, key: &str) -> Result<Comod> {
    s.comod(key).ok_or_else(|| usage(format!("no comodule `{key}`")))
}

fn right(s: &Session, key: &str) -> Result<RightComodule> {
    comod(s, key)?.as_right().ok_or_else(|| usage(format!("`{key}` has no right coaction")))
}

fn left(s: &Session, key: &str) -> Result<LeftComodule> {
    comod(s, key)?.as_left().ok_or_else(|| usage(format!("`{key}` has no left coaction")))
}

fn bi(s: &Session, key: &str) -> Result<Bicomodule> {
    match comod(s, key)? {
        Comod::Bi(b) => Ok(b),
        other => Err(usage(format!("`{key}` is a {}, expected a bicomodule", other.kind()))),
    }
}

/// Rejects objects living over a coalgebra other than the named one.
fn over_named(c: Option<&CoalgebraRef>, objs: &[&CoalgebraRef]) -> Result<()> {
    if let Some(c) = c {
        if objs.iter().any(|o| o.as_ref() != c.as_ref()) {
            return Err(cotor_core::Error::MixedCoalgebras.into());
        }
    }
    Ok(())
}

fn comod_over(m: &Comod) -> &CoalgebraRef {
    match m {
        Comod::Right(x) => x.over(),
        Comod::Left(x) => x.over(),
        Comod::Bi(x) => x.right_over(),
    }
}

fn matrix_table(title: &str, m: &cotor_core::Mat) -> Table {
    let cols: Vec<String> = (0..m.cols()).map(|j| j.to_string()).collect();
    let col_refs: Vec<&str> = cols.iter().map(String::as_str).collect();
    let mut t = Table::new(title, &col_refs);
    for i in 0..m.rows() {
        t.push(m.row(i).iter().map(|x| x.to_string().into()).collect());
    }
    t
}

fn coalgebra_summary(title: &str, c: &FinCoalgebra) -> Table {
    let mut t = Table::new(title, &["property", "value"]);
    t.push(vec!["dim".into(), c.dim().into()]);
    for r in &c.validate().rows {
        t.push(vec![r.label.clone().into(), (if r.passed { "ok" } else { "FAIL" }).into()]);
    }
    t
}

fn algebra_summary(title: &str, a: &FinAlgebra) -> Table {
    let mut t = Table::new(title, &["property", "value"]);
    t.push(vec!["dim".into(), a.dim().into()]);
    t.push(vec!["center dim".into(), a.center_dim().into()]);
    for r in &a.validate().rows {
        t.push(vec![r.label.clone().into(), (if r.passed { "ok" } else { "FAIL" }).into()]);
    }
    t
}

fn validate_session(name: &str, s: &Session, rep: &mut Report) {
    let mut t = Table::new(format!("session {name} ({})", s.field), &["key", "kind", "dim", "status"]);
    for (k, kind, dim) in s.inventory() {
        t.push(vec![k.into(), kind.into(), dim.into(), "valid".into()]);
    }
    rep.table(t);
}

fn spectral_tables(name: &str, b: &Bicomplex, rep: &mut Report) -> Result<()> {
    for (fname, filt) in [("I", Filtration::I), ("II", Filtration::II)] {
        for r in 0..=2u8 {
            rep.table(Table::grid(format!("{name}: {fname} E{r}"), &b.spectral_page(filt, r)?));
        }
    }
    let tot = b.total_complex()?.homology_dims();
    rep.table(Table::graded(format!("{name}: total homology"), &tot));
    let mut t = Table::new(format!("{name}: Euler characteristics"), &["filtration", "E2", "total"]);
    let mut ok = true;
    for (fname, filt) in [("I", Filtration::I), ("II", Filtration::II)] {
        let (page, total) = b.euler_characteristics(filt)?;
        ok &= page == total;
        t.push(vec![fname.into(), page.into(), total.into()]);
    }
    rep.table(t);
    rep.verdict_from(ok, if ok { "pass" } else { "fail" });
    Ok(())
}

fn execute(cli: &Cli, rep: &mut Report) -> Result<()> {
    let ctx = Ctx { cli };
    let max = cli.max_degree;
    match &cli.command {
        Command::Validate { coalgebra } => {
            if cli.session.is_none() && coalgebra.is_none() {
                for name in BUNDLE_NAMES {
                    validate_session(name, &bundle(name)?, rep);
                }
            } else {
                let s = ctx.open(coalgebra.as_deref(), false)?;
                let name = cli.session.as_ref().map_or_else(
                    || coalgebra.clone().unwrap_or_default(),
                    |p| p.file_name().map_or_else(String::new, |f| f.to_string_lossy().into_owned()),
                );
                validate_session(&name, &s, rep);
            }
        }
        Command::Dual { coalgebra: Some(key), .. } => {
            let s = ctx.open(Some(key), false)?;
            let a = dualize_coalgebra(&*coalgebra(&s, key)?)?;
            rep.table(algebra_summary(&format!("dual algebra of {key}"), &a));
            rep.table(matrix_table("mul", a.mul()));
            rep.table(matrix_table("unit", &a.unit().transpose()));
        }
        Command::Dual { algebra: Some(key), .. } => {
            let s = ctx.open(None, true)?;
            let c = dualize_algebra(&algebra(&s, key)?)?;
            rep.table(coalgebra_summary(&format!("dual coalgebra of {key}"), &c));
            rep.table(matrix_table("delta", c.delta()));
            rep.table(matrix_table("counit", c.counit()));
        }
        Command::Dual { .. } => return Err(usage("dual needs --coalgebra or --algebra")),
        Command::Envelope { coalgebra: key, m } => {
            let s = ctx.open(Some(key), false)?;
            let c = coalgebra(&s, key)?;
            let ce = envelope(&c)?;
            let cocommutative = c.opposite() == *c;
            let mut t = coalgebra_summary(&format!("envelope of {key}"), &ce);
            t.push(vec!["cocommutative base".into(), (if cocommutative { "yes" } else { "no" }).into()]);
            rep.table(t);
            if let Some(mk) = m {
                let b = bi(&s, mk)?;
                over_named(Some(&c), &[b.right_over(), b.left_over()])?;
                let (r, l) = envelope_view_over(&b, &ce.into_ref())?;
                let mut t = Table::new(format!("envelope views of {mk}"), &["view", "dim", "status"]);
                for (name, rep_) in [("right", r.validate()), ("left", l.validate())] {
                    t.push(vec![name.into(), b.dim().into(), (if rep_.passed() { "valid" } else { "FAIL" }).into()]);
                }
                rep.table(t);
            }
        }
        Command::Cotensor { coalgebra: ck, m, n } => {
            let s = ctx.open(ck.as_deref(), false)?;
            let mut t = Table::new(format!("{m} □ {n}"), &["object", "dim"]);
            if let (Comod::Bi(mb), Comod::Bi(nb)) = (comod(&s, m)?, comod(&s, n)?) {
                over_named(ck.as_deref().map(|k| coalgebra(&s, k)).transpose()?.as_ref(), &[mb.right_over()])?;
                let x = cotensor_bicomodule(&mb, &nb)?;
                t.push(vec!["bicomodule".into(), x.dim().into()]);
            } else {
                let (r, l) = (right(&s, m)?, left(&s, n)?);
                over_named(ck.as_deref().map(|k| coalgebra(&s, k)).transpose()?.as_ref(), &[r.over()])?;
                t.push(vec!["subspace".into(), cotensor(&r, &l)?.dim().into()]);
            }
            rep.table(t);
        }
        Command::Cotor { coalgebra: ck, m, n } => {
            let s = ctx.open(ck.as_deref(), false)?;
            let (r, l) = (right(&s, m)?, left(&s, n)?);
            over_named(ck.as_deref().map(|k| coalgebra(&s, k)).transpose()?.as_ref(), &[r.over(), l.over()])?;
            rep.table(Table::graded(format!("Cotor({m}, {n})"), &cotor(&r, &l, max)?));
        }
        Command::Cohom { coalgebra: ck, x, m } => {
            let s = ctx.open(ck.as_deref(), false)?;
            let (xo, mo) = (comod(&s, x)?, comod(&s, m)?);
            over_named(ck.as_deref().map(|k| coalgebra(&s, k)).transpose()?.as_ref(), &[comod_over(&xo)])?;
            let mut t = Table::new(format!("h({x}, {m})"), &["object", "dim"]);
            t.push(vec!["cohom".into(), cohom(&xo, &mo)?.dim().into()]);
            rep.table(t);
        }
        Command::Coext { coalgebra: ck, x, m } => {
            let s = ctx.open(ck.as_deref(), false)?;
            let dims = match (comod(&s, x)?, comod(&s, m)?) {
                (Comod::Bi(xb), Comod::Bi(mb)) => {
                    over_named(ck.as_deref().map(|k| coalgebra(&s, k)).transpose()?.as_ref(), &[xb.right_over()])?;
                    pseudo_coext(&xb, &mb, max)?
                }
                (Comod::Right(xr), Comod::Right(mr)) => {
                    over_named(ck.as_deref().map(|k| coalgebra(&s, k)).transpose()?.as_ref(), &[xr.over()])?;
                    pseudo_coext_right(&xr, &mr, max)?
                }
                _ => return Err(usage("coext needs two bicomodules or two right comodules")),
            };
            rep.table(Table::graded(format!("Pcoext({x}, {m})"), &dims));
        }
        Command::Adjoined { coalgebra: key, m } => {
            let s = ctx.open(Some(key), false)?;
            let c = coalgebra(&s, key)?;
            let mv = match comod(&s, m)? {
                Comod::Bi(b) => {
                    over_named(Some(&c), &[b.right_over(), b.left_over()])?;
                    envelope_view_over(&b, &envelope(&c)?.into_ref())?.0
                }
                Comod::Right(r) => r,
                Comod::Left(_) => return Err(usage(format!("`{m}` is a left comodule"))),
            };
            rep.table(Table::graded(format!("adjoined homology of {key} with {m}"), &adjoined_homology(&c, &mv, max)?));
        }
        Command::HhAlg { algebra: key, bimodule, variant } => {
            let s = if cli.session.is_some() { ctx.open(None, false)? } else { ctx.open(None, true)? };
            let a = algebra(&s, key)?;
            let m = match bimodule {
                Some(b) => s.bimodule(b).cloned().ok_or_else(|| usage(format!("no bimodule `{b}`")))?,
                None => Bimodule::regular(&a),
            };
            if m.over() != &a {
                return Err(usage("bimodule is over a different algebra"));
            }
            let (v, name) = match variant {
                Variant::Cochain => (HochschildVariant::Cochain, "HH^"),
                Variant::Chain => (HochschildVariant::Chain, "HH_"),
            };
            let coeff = bimodule.as_deref().unwrap_or(key.as_str());
            rep.table(Table::graded(format!("{name}*({key}, {coeff})"), &hochschild_dims(&m, max, v)?));
            if *variant == Variant::Cochain && bimodule.is_none() {
                let mut t = Table::new("degree 0 against the center", &["HH^0", "center dim"]);
                t.push(vec![hochschild_dims(&m, 0, v)?.at(0).into(), a.center_dim().into()]);
                rep.table(t);
            }
        }
        Command::HhCoalg { coalgebra: key, m } => {
            let s = ctx.open(Some(key), false)?;
            let c = coalgebra(&s, key)?;
            let mb = match m {
                Some(k) => bi(&s, k)?,
                None => Bicomodule::regular(&c),
            };
            let coeff = m.as_deref().unwrap_or(key.as_str());
            rep.table(Table::graded(format!("HH^*({key}, {coeff})"), &coalgebra_hochschild(&c, &mb, max)?));
        }
        Command::Les { coalgebra: ck, ses, functor, against } => {
            let s = ctx.open(ck.as_deref(), false)?;
            let q = s.sequence(ses).ok_or_else(|| usage(format!("no sequence `{ses}`")))?;
            let f = match functor {
                LesKind::Cotor => LesFunctor::CotorAgainst(left(&s, against)?),
                LesKind::Coext => LesFunctor::PcoextAgainst(comod(&s, against)?),
            };
            rep.check(&les_check(q, &f, max)?);
        }
        Command::Spectral { bicomplex } => {
            let all = fixtures::bicomplexes();
            let chosen: Vec<_> = match bicomplex {
                Some(name) => {
                    let b = all.into_iter().find(|(n, _)| n == name);
                    vec![b.ok_or_else(|| usage(format!("no bundled bicomplex `{name}`")))?]
                }
                None => all,
            };
            for (name, b) in &chosen {
                spectral_tables(name, b, rep)?;
            }
        }
        Command::CheckAw { coalgebra: key, m, n } => {
            let s = ctx.open(Some(key), false)?;
            let c = coalgebra(&s, key)?;
            rep.check(&abrams_weibel_check(&c, &right(&s, n)?, &left(&s, m)?, max)?);
        }
        Command::CheckDuality { coalgebra: key, m, order } => {
            let s = ctx.open(Some(key), false)?;
            let c = coalgebra(&s, key)?;
            rep.check(&duality_check(&c, &bi(&s, m)?, *order, max)?);
        }
        Command::CheckAutoenvelope { coalgebra: key, witness } => {
            let s = ctx.open(Some(key), false)?;
            let c = coalgebra(&s, key)?;
            let w = match witness {
                Some(k) => {
                    let (over, w) = s.witness(k).ok_or_else(|| usage(format!("no witness `{k}`")))?;
                    if over != key {
                        return Err(usage(format!("witness `{k}` belongs to `{over}`")));
                    }
                    w.clone()
                }
                None => IsoWitness::identity(&c),
            };
            rep.check(&autoenvelope_check(&c, &w)?);
        }
        Command::CheckFlipping { coalgebra: ck, resolution, b, c } => {
            let s = ctx.open(ck.as_deref(), false)?;
            let res = s.resolution(resolution).ok_or_else(|| usage(format!("no resolution `{resolution}`")))?;
            rep.check(&flipping_check(res, &comod(&s, b)?, &bi(&s, c)?, max)?);
        }
        Command::ProbeInjector { coalgebra: ck, x, ses } => {
            let s = ctx.open(ck.as_deref(), false)?;
            let q = s.sequence(ses).ok_or_else(|| usage(format!("no sequence `{ses}`")))?;
            let r = injector_probe(&comod(&s, x)?, q, max)?;
            rep.table(Table::check(&r));
            rep.verdict_from(r.passed(), injector_verdict(&r));
        }
    }
    Ok(())
}

/// Everything a run prints, plus its exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Parses `args` (without the program name) and runs the command.
///
/// Exit codes: 0 computed or passed, 2 a check failed, 1 bad input or usage.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(std::iter::once("cotor".to_string()).chain(args.iter().cloned())) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome { stdout: text, stderr: String::new(), code: 0 }
                }
                _ => Outcome { stdout: String::new(), stderr: text, code: 1 },
            };
        }
    };
    let mut rep = Report::new(args.join(" "));
    match execute(&cli, &mut rep) {
        Ok(()) => {
            let stdout = match cli.output {
                Output::Table => rep.to_text(),
                Output::Json => rep.to_json(),
            };
            Outcome { stdout, stderr: String::new(), code: if rep.failed { 2 } else { 0 } }
        }
        Err(e) => Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: 1 },
    }
}
