//! Command dispatch: turns a session plus flags into a [`Report`].

use std::sync::Arc;
use std::time::Instant;

use jetclosure_core::closures::{
    certify_arc_closed, cumulative_closure_chain, gorenstein_walkthrough, jet_closure,
    jsc_membership, matlis_embedding, minimal_power_exponent, socle_and_gorenstein, Certificate,
    LocalAlgebra, MatlisEmbedding,
};
use jetclosure_core::groebner::Ideal;
use jetclosure_core::jets::{fiber_ideal, jet_ideal, universal_jet_image, JetRing};
use jetclosure_core::newton::{monomial_integral_closure, MonomialIdealData};
use jetclosure_core::{
    parse_polynomial, Error as AlgebraError, FieldSpec, Polynomial, RingContext,
};
use serde_json::{json, Value};

use crate::report::{CertificateReport, Report};
use crate::session::{Session, SessionError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CommandKind {
    Derive,
    JetIdeal,
    FiberIdeal,
    Lambda,
    Closure,
    Chain,
    Certify,
    JscMember,
    Socle,
    Matlis,
    Walkthrough,
    Icl,
}

impl CommandKind {
    pub const ALL: [CommandKind; 12] = [
        CommandKind::Derive,
        CommandKind::JetIdeal,
        CommandKind::FiberIdeal,
        CommandKind::Lambda,
        CommandKind::Closure,
        CommandKind::Chain,
        CommandKind::Certify,
        CommandKind::JscMember,
        CommandKind::Socle,
        CommandKind::Matlis,
        CommandKind::Walkthrough,
        CommandKind::Icl,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CommandKind::Derive => "derive",
            CommandKind::JetIdeal => "jet-ideal",
            CommandKind::FiberIdeal => "fiber-ideal",
            CommandKind::Lambda => "lambda",
            CommandKind::Closure => "closure",
            CommandKind::Chain => "chain",
            CommandKind::Certify => "certify",
            CommandKind::JscMember => "jsc-member",
            CommandKind::Socle => "socle",
            CommandKind::Matlis => "matlis",
            CommandKind::Walkthrough => "walkthrough",
            CommandKind::Icl => "icl",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        CommandKind::ALL.into_iter().find(|c| c.name() == name)
    }
}

#[derive(Clone, Debug, Default)]
pub struct Options {
    pub ideal: Option<String>,
    pub modulus: Option<String>,
    pub poly: Option<String>,
    pub level: Option<usize>,
    pub max_level: Option<usize>,
    pub power: Option<u32>,
    pub timing: bool,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Session(#[from] SessionError),
    #[error("{0}")]
    Parse(AlgebraError),
    #[error("{0}")]
    Domain(AlgebraError),
}

impl CliError {
    /// 1 for mathematical failures, 2 for malformed input.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 1,
            _ => 2,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "UsageError",
            CliError::Session(e) => e.name(),
            CliError::Parse(e) | CliError::Domain(e) => e.name(),
        }
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::Syntax { .. }
            | AlgebraError::UnknownVariable(_)
            | AlgebraError::InvalidVariable(_)
            | AlgebraError::DuplicateVariable(_)
            | AlgebraError::ZeroDenominator => CliError::Parse(e),
            other => CliError::Domain(other),
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn strings(polys: &[Polynomial]) -> Vec<String> {
    polys.iter().map(|p| p.to_string()).collect()
}

/// Variables of a ring read off a polynomial string, in order of first
/// appearance.
fn identifiers(text: &str) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i].is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            let name = &text[start..i];
            if !out.iter().any(|v| v == name) {
                out.push(name.to_string());
            }
        } else {
            i += 1;
        }
    }
    out
}

struct Context<'a> {
    session: Option<&'a Session>,
    ring: Arc<RingContext>,
    opts: &'a Options,
}

impl Context<'_> {
    fn session(&self) -> Result<&Session> {
        self.session
            .ok_or_else(|| CliError::Usage("--session FILE is required for this command".into()))
    }

    fn named(&self, name: &str) -> Result<Ideal> {
        self.session()?
            .ideal(name)
            .cloned()
            .ok_or_else(|| CliError::Usage(format!("unknown ideal `{name}`")))
    }

    fn ideal(&self) -> Result<(String, Ideal)> {
        let name = self
            .opts
            .ideal
            .as_ref()
            .ok_or_else(|| CliError::Usage("--ideal NAME is required".into()))?;
        Ok((name.clone(), self.named(name)?))
    }

    fn modulus(&self) -> Result<(Option<String>, Ideal)> {
        match &self.opts.modulus {
            Some(name) => Ok((Some(name.clone()), self.named(name)?)),
            None => Ok((None, Ideal::zero(&self.ring))),
        }
    }

    /// The modulus for commands about a single algebra: `--modulus`, or
    /// `--ideal` when no modulus is given.
    fn algebra_modulus(&self) -> Result<(String, Ideal)> {
        match (&self.opts.modulus, &self.opts.ideal) {
            (Some(name), _) | (None, Some(name)) => Ok((name.clone(), self.named(name)?)),
            (None, None) => Err(CliError::Usage("--modulus NAME is required".into())),
        }
    }

    fn poly(&self) -> Result<(String, Polynomial)> {
        let text = self
            .opts
            .poly
            .as_ref()
            .ok_or_else(|| CliError::Usage("--poly STRING is required".into()))?;
        Ok((text.clone(), parse_polynomial(text, &self.ring)?))
    }

    fn level(&self) -> Result<usize> {
        self.opts
            .level
            .ok_or_else(|| CliError::Usage("--level N is required".into()))
    }

    fn max_level(&self) -> Result<usize> {
        self.opts
            .max_level
            .ok_or_else(|| CliError::Usage("--max-level N is required".into()))
    }
}

fn ideal_value(name: Option<&str>, ideal: &Ideal) -> Value {
    json!({ "name": name, "generators": strings(ideal.generators()) })
}

fn certificate_report(c: &Certificate, requested: usize) -> CertificateReport {
    let chain = c.chain().iter().map(|i| strings(i.generators())).collect();
    match c {
        Certificate::Certified { level, .. } => CertificateReport {
            status: "Certified".into(),
            level: Some(*level),
            max_level: requested,
            chain,
        },
        Certificate::NotCertified { max_level, .. } => CertificateReport {
            status: "NotCertified".into(),
            level: None,
            max_level: *max_level,
            chain,
        },
    }
}

fn matlis_value(m: &MatlisEmbedding) -> Value {
    let images: Vec<Value> = m
        .images
        .iter()
        .map(|(b, img)| {
            let b = Polynomial::from_monomial(img.ring(), b.clone());
            json!({ "monomial": b.to_string(), "image": img.to_string() })
        })
        .collect();
    json!({
        "power": m.power,
        "witness": m.witness.to_string(),
        "colon": strings(&m.colon),
        "images": images,
        "verified": m.is_verified(),
    })
}

fn matlis_dims(report: &mut Report, m: &MatlisEmbedding) {
    report.dims.insert("length_source".into(), m.length_source);
    report.dims.insert("length_target".into(), m.length_target);
    report
        .dims
        .insert("length_colon_quotient".into(), m.length_colon_quotient);
    report.dims.insert("rank".into(), m.rank);
}

/// Runs one command. `session` may be omitted for `derive`, whose ring is
/// then `Q[identifiers of --poly]`.
pub fn run_command(session: Option<&Session>, kind: CommandKind, opts: &Options) -> Result<Report> {
    let started = Instant::now();
    let ring = match session {
        Some(s) => s.ring().clone(),
        None if kind == CommandKind::Derive => {
            let text = opts.poly.as_deref().unwrap_or_default();
            RingContext::new(FieldSpec::Rationals, identifiers(text))?
        }
        None => {
            return Err(CliError::Usage(
                "--session FILE is required for this command".into(),
            ))
        }
    };
    let cx = Context {
        session,
        ring: ring.clone(),
        opts,
    };
    let mut report = Report::new(
        kind.name(),
        ring.field().to_string(),
        ring.variables().to_vec(),
    );
    let inputs = &mut report.inputs;
    for (key, value) in [
        ("level", opts.level.map(Value::from)),
        ("max_level", opts.max_level.map(Value::from)),
        ("power", opts.power.map(Value::from)),
        ("poly", opts.poly.clone().map(Value::from)),
    ] {
        if let Some(v) = value {
            inputs.insert(key.into(), v);
        }
    }

    match kind {
        CommandKind::Derive => {
            let (_, f) = cx.poly()?;
            let level = cx.level()?;
            let jr = JetRing::new(&ring, level)?;
            let ds = strings(&jr.derivations(&f)?);
            report.outputs.insert("derivations".into(), json!(ds));
            report.generators = ds;
            report
                .dims
                .insert("jet_variables".into(), jr.ring().nvars());
        }
        CommandKind::JetIdeal => {
            let (name, i) = cx.ideal()?;
            let level = cx.level()?;
            report
                .inputs
                .insert("ideal".into(), ideal_value(Some(&name), &i));
            let ji = jet_ideal(&i, level)?;
            report.generators = strings(ji.generators());
            report
                .dims
                .insert("generators".into(), ji.generators().len());
            report
                .dims
                .insert("jet_variables".into(), ji.jet_ring().ring().nvars());
        }
        CommandKind::FiberIdeal => {
            let (name, i) = cx.ideal()?;
            let level = cx.level()?;
            report
                .inputs
                .insert("ideal".into(), ideal_value(Some(&name), &i));
            let fiber = fiber_ideal(&i, level)?;
            report.generators = strings(&fiber.canonical_generators());
            report
                .dims
                .insert("generators".into(), report.generators.len());
        }
        CommandKind::Lambda => {
            let (_, f) = cx.poly()?;
            let level = cx.level()?;
            let (mname, mut target) = cx.modulus()?;
            report
                .inputs
                .insert("modulus".into(), ideal_value(mname.as_deref(), &target));
            if cx.opts.ideal.is_some() {
                let (name, a) = cx.ideal()?;
                report
                    .inputs
                    .insert("ideal".into(), ideal_value(Some(&name), &a));
                target = target.sum(&a)?;
            }
            let images = strings(&universal_jet_image(&f, &target, level)?);
            let zero = images.iter().all(|s| s == "0");
            report.outputs.insert("images".into(), json!(images));
            report.outputs.insert("in_kernel".into(), json!(zero));
            report.dims.insert(
                "nonzero".into(),
                images.iter().filter(|s| *s != "0").count(),
            );
            report.generators = images;
        }
        CommandKind::Closure => {
            let (name, a) = cx.ideal()?;
            let (mname, modulus) = cx.modulus()?;
            let level = cx.level()?;
            report
                .inputs
                .insert("ideal".into(), ideal_value(Some(&name), &a));
            report
                .inputs
                .insert("modulus".into(), ideal_value(mname.as_deref(), &modulus));
            let rep = jet_closure(&LocalAlgebra::new(modulus)?, &a, level)?;
            report.outputs.insert(
                "primary".into(),
                json!(strings(&rep.primary.canonical_generators())),
            );
            report
                .outputs
                .insert("kernel".into(), json!(strings(&rep.kernel)));
            report.generators = strings(&rep.generators);
            report.dims.insert("dimA".into(), rep.dim_quotient);
            report.dims.insert("dimClosure".into(), rep.dim_closure);
        }
        CommandKind::Chain => {
            let (name, a) = cx.ideal()?;
            let (mname, modulus) = cx.modulus()?;
            let max = cx.max_level()?;
            report
                .inputs
                .insert("ideal".into(), ideal_value(Some(&name), &a));
            report
                .inputs
                .insert("modulus".into(), ideal_value(mname.as_deref(), &modulus));
            let chain = cumulative_closure_chain(&LocalAlgebra::new(modulus)?, &a, max)?;
            let gens: Vec<Vec<String>> = chain.iter().map(|c| strings(c.generators())).collect();
            report.generators = gens.last().cloned().unwrap_or_default();
            report.outputs.insert("chain".into(), json!(gens));
            report.dims.insert("levels".into(), chain.len());
        }
        CommandKind::Certify => {
            let (name, a) = cx.ideal()?;
            let (mname, modulus) = cx.modulus()?;
            let max = cx.max_level()?;
            report
                .inputs
                .insert("ideal".into(), ideal_value(Some(&name), &a));
            report
                .inputs
                .insert("modulus".into(), ideal_value(mname.as_deref(), &modulus));
            let algebra = LocalAlgebra::new(modulus)?;
            let cert = certify_arc_closed(&algebra, &a, max)?;
            report.generators = strings(&algebra.fold(&a)?.canonical_generators());
            if !cert.is_certified() {
                report.outputs.insert(
                    "note".into(),
                    json!("the chain did not close by the maximal level; this proves nothing about arc-closedness"),
                );
            }
            report.certificate = Some(certificate_report(&cert, max));
        }
        CommandKind::JscMember => {
            let (name, a) = cx.ideal()?;
            let (mname, modulus) = cx.modulus()?;
            let (_, f) = cx.poly()?;
            let level = cx.level()?;
            report
                .inputs
                .insert("ideal".into(), ideal_value(Some(&name), &a));
            report
                .inputs
                .insert("modulus".into(), ideal_value(mname.as_deref(), &modulus));
            let member = jsc_membership(&LocalAlgebra::new(modulus)?, &a, &f, level)?;
            report.outputs.insert("member".into(), json!(member));
        }
        CommandKind::Socle => {
            let (name, modulus) = cx.algebra_modulus()?;
            report
                .inputs
                .insert("modulus".into(), ideal_value(Some(&name), &modulus));
            let socle = socle_and_gorenstein(&LocalAlgebra::new(modulus)?)?;
            let standard: Vec<String> = socle
                .standard_monomials
                .iter()
                .map(|m| Polynomial::from_monomial(&ring, m.clone()).to_string())
                .collect();
            report
                .outputs
                .insert("gorenstein".into(), json!(socle.is_gorenstein()));
            report
                .outputs
                .insert("standard_monomials".into(), json!(standard));
            report.generators = strings(&socle.basis);
            report
                .dims
                .insert("length".into(), socle.standard_monomials.len());
            report.dims.insert("socle".into(), socle.dimension());
        }
        CommandKind::Matlis => {
            let (name, modulus) = cx.algebra_modulus()?;
            report
                .inputs
                .insert("modulus".into(), ideal_value(Some(&name), &modulus));
            let algebra = LocalAlgebra::new(modulus)?;
            let power = match opts.power {
                Some(n) => n,
                None => minimal_power_exponent(&algebra)?,
            };
            let m = matlis_embedding(&algebra, power)?;
            report.outputs.insert("matlis".into(), matlis_value(&m));
            report.generators = vec![m.witness.to_string()];
            matlis_dims(&mut report, &m);
            report.dims.insert("power".into(), power as usize);
        }
        CommandKind::Walkthrough => {
            let (name, modulus) = cx.algebra_modulus()?;
            let max = cx.max_level()?;
            report
                .inputs
                .insert("modulus".into(), ideal_value(Some(&name), &modulus));
            let w = gorenstein_walkthrough(&LocalAlgebra::new(modulus)?, max)?;
            let stages: Vec<Value> = w
                .stages
                .iter()
                .map(|s| {
                    json!({
                        "modulus": strings(&s.modulus),
                        "length": s.length,
                        "socle": strings(&s.socle),
                        "gorenstein": s.gorenstein,
                        "removed": s.removed.as_ref().map(|g| g.to_string()),
                        "certificate": serde_json::to_value(certificate_report(&s.certificate, max)).unwrap(),
                    })
                })
                .collect();
            report.outputs.insert("stages".into(), Value::Array(stages));
            report
                .outputs
                .insert("matlis".into(), matlis_value(&w.matlis));
            let last = w.stages.last().unwrap();
            report.generators = strings(&last.modulus);
            report.certificate = Some(certificate_report(&last.certificate, max));
            report.dims.insert("steps".into(), w.steps());
            report.dims.insert("final_length".into(), last.length);
            matlis_dims(&mut report, &w.matlis);
        }
        CommandKind::Icl => {
            let (name, a) = cx.ideal()?;
            report
                .inputs
                .insert("ideal".into(), ideal_value(Some(&name), &a));
            let data = MonomialIdealData::from_ideal(&a)?;
            let closure = monomial_integral_closure(&data);
            let gens = closure.to_ideal(&ring)?;
            report.generators = strings(gens.generators());
            let added: Vec<String> = closure
                .generators()
                .iter()
                .zip(gens.generators())
                .filter(|(e, _)| !data.contains(e))
                .map(|(_, g)| g.to_string())
                .collect();
            report.outputs.insert("added".into(), json!(added));
            report
                .dims
                .insert("generators".into(), report.generators.len());
        }
    }
    if opts.timing {
        report.millis = Some(started.elapsed().as_millis() as u64);
    }
    Ok(report)
}
