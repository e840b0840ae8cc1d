//! Named verification suites over the algebra identities, with structured
//! reports for the CLI and the bindings. Checks are deterministic given the
//! seed; report ordering is canonical (sorted by check name).

use std::time::Instant;

use serde::Serialize;

use crate::capelli;
use crate::error::{Check, Error, Failure, Result};
use crate::gelfand;
use crate::hc;
use crate::homs::{self, RhoMap, RhoFault};
use crate::repmod;
use crate::scalar::{qr, Q};
use crate::ugl::{GlRank, UglElement};
use crate::uprime;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SuiteName {
    RhoHom,
    Diagram,
    Hc,
    Capelli,
    Newton,
    CayleyHamilton,
    Gelfand,
    Appendix,
    Uprime,
    Modules,
    All,
}

impl SuiteName {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "rho-hom" => SuiteName::RhoHom,
            "diagram" => SuiteName::Diagram,
            "hc" => SuiteName::Hc,
            "capelli" => SuiteName::Capelli,
            "newton" => SuiteName::Newton,
            "cayley-hamilton" => SuiteName::CayleyHamilton,
            "gelfand" => SuiteName::Gelfand,
            "appendix" => SuiteName::Appendix,
            "uprime" => SuiteName::Uprime,
            "modules" => SuiteName::Modules,
            "all" => SuiteName::All,
            other => {
                return Err(Error::InvalidParameter(format!("unknown suite '{other}'")));
            }
        })
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            SuiteName::RhoHom => "rho-hom",
            SuiteName::Diagram => "diagram",
            SuiteName::Hc => "hc",
            SuiteName::Capelli => "capelli",
            SuiteName::Newton => "newton",
            SuiteName::CayleyHamilton => "cayley-hamilton",
            SuiteName::Gelfand => "gelfand",
            SuiteName::Appendix => "appendix",
            SuiteName::Uprime => "uprime",
            SuiteName::Modules => "modules",
            SuiteName::All => "all",
        }
    }

    pub fn all_suites() -> &'static [SuiteName] {
        &[
            SuiteName::RhoHom,
            SuiteName::Diagram,
            SuiteName::Hc,
            SuiteName::Capelli,
            SuiteName::Newton,
            SuiteName::CayleyHamilton,
            SuiteName::Gelfand,
            SuiteName::Appendix,
            SuiteName::Uprime,
            SuiteName::Modules,
        ]
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteParams {
    pub n: usize,
    pub kmax: usize,
    pub series_order: usize,
    pub trunc_degree: usize,
    pub seed: u64,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            n: 1,
            kmax: 3,
            series_order: 4,
            trunc_degree: 3,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteSpec {
    pub suite: SuiteName,
    pub params: SuiteParams,
}

/// Fault-injection switches for negative-control runs.
#[derive(Clone, Copy, Default, Debug)]
pub struct Hooks {
    /// Use a corrupted rho generator table.
    pub corrupt_rho: bool,
    /// Use the unsigned column determinant for the centrality checks.
    pub unsigned_det: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    pub witness: Option<String>,
    pub ms: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub params: SuiteParams,
    pub checks: Vec<CheckResult>,
    pub overall: Status,
    pub version: String,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.overall == Status::Pass
    }

    pub fn zero_timings(&mut self) {
        for c in &mut self.checks {
            c.ms = 0;
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let width = self
            .checks
            .iter()
            .map(|c| c.name.len())
            .max()
            .unwrap_or(0)
            .max(8);
        for c in &self.checks {
            let status = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skip => "skip",
            };
            out.push_str(&format!(
                "{:<width$}  {:<4}  {:>8} ms",
                c.name,
                status,
                c.ms,
                width = width
            ));
            if let Some(w) = &c.witness {
                out.push_str(&format!("  {w}"));
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "overall: {}\n",
            if self.passed() { "pass" } else { "FAIL" }
        ));
        out
    }
}

type NamedCheck = (String, Box<dyn FnOnce() -> Check>);

fn lambda_for(n: usize) -> Vec<Q> {
    [qr(1, 3), qr(-1, 5), qr(-2, 7)][..n].to_vec()
}

fn checks_for(suite: SuiteName, p: &SuiteParams, hooks: Hooks) -> Vec<NamedCheck> {
    let n = p.n;
    let kmax = p.kmax;
    let series = p.series_order;
    let depth = p.trunc_degree;
    let seed = p.seed;
    let rho = move || {
        if hooks.corrupt_rho {
            RhoMap::with_fault(n, RhoFault::DropR1FromE00)
        } else {
            RhoMap::new(n)
        }
    };
    let mut out: Vec<NamedCheck> = Vec::new();
    let mut push = |name: String, f: Box<dyn FnOnce() -> Check>| out.push((name, f));
    match suite {
        SuiteName::RhoHom => {
            push(
                "rho-hom/generator-pairs".into(),
                Box::new(move || homs::verify_hom(&rho())),
            );
            push(
                "rho-hom/g1-in-kernel".into(),
                Box::new(move || {
                    let image = rho().apply(&UglElement::g1(GlRank::gl1(n)));
                    if image.is_zero() {
                        Ok(())
                    } else {
                        Err(Failure::new("rho-hom", format!("rho(G_1) = {image}")))
                    }
                }),
            );
        }
        SuiteName::Diagram => {
            push(
                "diagram/commutes".into(),
                Box::new(move || homs::verify_diagram(&rho())),
            );
        }
        SuiteName::Hc => {
            push(
                "hc/anchor-chi-g1".into(),
                Box::new(move || {
                    let rank = GlRank::gl(n);
                    let img = hc::chi(&gelfand::gelfand_g(rank, 1))
                        .map_err(|e| Failure::new("hc", e.to_string()))?;
                    let mut expected =
                        crate::cpoly::CPoly::constant(crate::scalar::q((n * (n - 1) / 2) as i64));
                    for i in 1..=n {
                        expected = expected.add(&crate::cpoly::CPoly::var(i as u32));
                    }
                    if img.poly == expected {
                        Ok(())
                    } else {
                        Err(Failure::new("hc", format!("chi(G_1) = {}", img.poly)))
                    }
                }),
            );
            push(
                "hc/anchor-ell".into(),
                Box::new(move || {
                    let img = hc::chi_0n(&crate::tensor::r1(n))
                        .map_err(|e| Failure::new("hc", e.to_string()))?;
                    if img.poly == hc::ell(n) {
                        Ok(())
                    } else {
                        Err(Failure::new("hc", format!("chi_0n(R_1) = {}", img.poly)))
                    }
                }),
            );
            push(
                "hc/diagram".into(),
                Box::new(move || hc::verify_hc_diagram(&rho(), kmax)),
            );
        }
        SuiteName::Capelli => {
            let signed = !hooks.unsigned_det;
            push(
                "capelli/centrality-small".into(),
                Box::new(move || capelli::verify_capelli_centrality(GlRank::gl(n), signed)),
            );
            push(
                "capelli/centrality-large".into(),
                Box::new(move || capelli::verify_capelli_centrality(GlRank::gl1(n), signed)),
            );
            push(
                "capelli/variant-consistency".into(),
                Box::new(move || {
                    capelli::verify_variant_consistency(GlRank::gl(n))?;
                    capelli::verify_variant_consistency(GlRank::gl1(n))
                }),
            );
            push(
                "capelli/minor-identities".into(),
                Box::new(move || capelli::verify_minor_identities(n)),
            );
            push(
                "capelli/factorization".into(),
                Box::new(move || capelli::verify_thm_rho_capelli(&rho())),
            );
        }
        SuiteName::Newton => {
            push(
                "newton/gl-small".into(),
                Box::new(move || capelli::verify_newton(GlRank::gl(n), series)),
            );
            push(
                "newton/gl-large".into(),
                Box::new(move || capelli::verify_newton(GlRank::gl1(n), series)),
            );
            push(
                "newton/rho-series".into(),
                Box::new(move || capelli::verify_rho_newton(&rho(), series)),
            );
        }
        SuiteName::CayleyHamilton => {
            push(
                "cayley-hamilton/identities".into(),
                Box::new(move || capelli::verify_cayley_hamilton(&rho())),
            );
        }
        SuiteName::Gelfand => {
            push(
                "gelfand/closed-form".into(),
                Box::new(move || gelfand::verify_thm_rho_g(&rho(), kmax)),
            );
            push(
                "gelfand/traces-sum-to-closed-form".into(),
                Box::new(move || gelfand::verify_appendix_implies_thm(n, kmax)),
            );
        }
        SuiteName::Appendix => {
            push(
                "appendix/all-index-cases".into(),
                Box::new(move || gelfand::verify_appendix(&rho(), kmax)),
            );
        }
        SuiteName::Uprime => {
            push(
                "uprime/representative-basics".into(),
                Box::new(move || uprime::verify_uprime_basics(n)),
            );
            push(
                "uprime/reduction-roundtrip".into(),
                Box::new(move || uprime::verify_reduction_roundtrip(n, 100, seed)),
            );
            push(
                "uprime/pi-g-prime".into(),
                Box::new(move || uprime::verify_pi_g_prime(n, seed)),
            );
            push(
                "uprime/cleared-rows".into(),
                Box::new(move || uprime::verify_cleared_u_identity(n)),
            );
        }
        SuiteName::Modules => {
            let avals: Vec<i64> = if n == 1 { vec![-1, 0, 2] } else { vec![1] };
            for a in avals {
                push(
                    format!("modules/central-character-a{a}"),
                    Box::new(move || {
                        repmod::verify_central_character(&rho(), a, &lambda_for(n), kmax, depth)
                    }),
                );
                push(
                    format!("modules/characters-a{a}"),
                    Box::new(move || repmod::character_compare(n, a, &lambda_for(n), depth)),
                );
            }
        }
        SuiteName::All => {
            for s in SuiteName::all_suites() {
                out.extend(checks_for(*s, p, hooks));
            }
        }
    }
    out
}

pub fn validate(p: &SuiteParams) -> Result<()> {
    if p.n < 1 {
        return Err(Error::InvalidParameter("n must be >= 1".into()));
    }
    if p.kmax < 1 || p.series_order < 1 || p.trunc_degree < 1 {
        return Err(Error::InvalidParameter(
            "kmax, series-order, and trunc-degree must be >= 1".into(),
        ));
    }
    if p.n > 3 {
        return Err(Error::InvalidParameter(
            "n > 3 is outside the verified range of this build".into(),
        ));
    }
    Ok(())
}

pub fn run_suite(spec: &SuiteSpec) -> Result<Report> {
    run_suite_with(spec, Hooks::default())
}

pub fn run_suite_with(spec: &SuiteSpec, hooks: Hooks) -> Result<Report> {
    validate(&spec.params)?;
    let mut checks = Vec::new();
    for (name, f) in checks_for(spec.suite, &spec.params, hooks) {
        let start = Instant::now();
        let outcome = f();
        let ms = start.elapsed().as_millis() as u64;
        let (status, witness) = match outcome {
            Ok(()) => (Status::Pass, None),
            Err(failure) => (Status::Fail, Some(failure.witness)),
        };
        checks.push(CheckResult {
            name,
            status,
            witness,
            ms,
        });
    }
    checks.sort_by(|a, b| a.name.cmp(&b.name));
    let overall = if checks.iter().any(|c| c.status == Status::Fail) {
        Status::Fail
    } else {
        Status::Pass
    };
    Ok(Report {
        suite: spec.suite.as_str().to_string(),
        params: spec.params.clone(),
        checks,
        overall,
        version: env!("CARGO_PKG_VERSION").to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_roundtrip() {
        for s in SuiteName::all_suites() {
            assert_eq!(SuiteName::parse(s.as_str()).unwrap(), *s);
        }
        assert!(SuiteName::parse("bogus").is_err());
    }

    #[test]
    fn invalid_parameters_are_rejected() {
        let mut p = SuiteParams::default();
        p.n = 0;
        assert!(validate(&p).is_err());
    }

    #[test]
    fn rho_hom_suite_passes_and_fault_fails() {
        let spec = SuiteSpec {
            suite: SuiteName::RhoHom,
            params: SuiteParams::default(),
        };
        let report = run_suite(&spec).unwrap();
        assert!(report.passed());
        let bad = run_suite_with(
            &spec,
            Hooks {
                corrupt_rho: true,
                unsigned_det: false,
            },
        )
        .unwrap();
        assert!(!bad.passed());
        assert!(bad
            .checks
            .iter()
            .any(|c| c.status == Status::Fail && c.witness.is_some()));
    }
}
