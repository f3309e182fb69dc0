use std::fs;
use std::path::Path;

use num_bigint::BigInt;
use serde_json::{json, Value};

use rmdesign_core::checks::{self, CheckOptions, Target};
use rmdesign_core::design::{assmus_mattson_t, delsarte_test, is_t_design, DesignReport, Route};
use rmdesign_core::gf2code::{extended_hamming, reed_muller_1};
use rmdesign_core::harmonic::{bachoc_transform, corollary_f, harm_basis, hwe, specht_basis};
use rmdesign_core::io::{format_block_set, format_generator_matrix, parse_block_set, parse_generator_matrix};
use rmdesign_core::jacobi::{
    classify_four_set, jacobi, jacobi_design_test, jacobi_transform, rm1_dual_jacobi_closed, rm1_jacobi_closed,
    SampleMode,
};
use rmdesign_core::{BinaryCode, Error, FourSet, HarmonicFn, Limits, Poly4, Result, SubsetFn, Subspace3, TClass};

use crate::args::{
    BachocArgs, Cli, CodeCmd, CodeOutput, CodeSource, Command, DesignArgs, Format, FunctionSource, Global,
    HarmBasisArgs, HweArgs, JacobiArgs, MethodArg, VerifyArgs,
};
use crate::Outcome;

fn usage(msg: impl Into<String>) -> Error {
    Error::Input(msg.into())
}

fn limits(g: &Global) -> Limits {
    Limits { max_dimension: g.max_dim, subset_cap: g.subset_cap, harm_cap: g.harm_cap }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn poly_json(p: &Poly4) -> Value {
    serde_json::from_str(&p.to_json()).expect("polynomial JSON is well formed")
}

fn emit(g: &Global, text: impl FnOnce() -> String, value: impl FnOnce() -> Value) {
    match g.format {
        Format::Text => println!("{}", text()),
        Format::Json => println!("{}", value()),
    }
}

/// Which named family a code came from, for the closed forms.
#[derive(Clone, Copy)]
enum Known {
    Rm1(usize),
    Hamming(usize),
    Other,
}

struct Loaded {
    label: String,
    code: BinaryCode,
    known: Known,
}

fn load(source: &CodeSource) -> Result<Loaded> {
    if let Some(m) = source.rm1 {
        return Ok(Loaded { label: format!("RM(1,{m})"), code: reed_muller_1(m)?, known: Known::Rm1(m) });
    }
    if let Some(m) = source.ehamming {
        let code = extended_hamming(m)?;
        return Ok(Loaded { label: format!("H_{}", code.len()), code, known: Known::Hamming(m) });
    }
    let path = source.file.as_ref().ok_or_else(|| usage("give --rm1, --ehamming or --file"))?;
    Ok(Loaded { label: path.display().to_string(), code: parse_generator_matrix(&read(path)?)?, known: Known::Other })
}

fn enumerable(code: &BinaryCode, g: &Global) -> Result<()> {
    code.check_enumerable_with(g.max_dim)
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let g = &cli.global;
    match &cli.command {
        Command::Code(cmd) => code(cmd, g),
        Command::Jacobi(a) => jacobi_cmd(a, g),
        Command::DesignCheck(a) => design_check(a, g),
        Command::AssmusMattson { source } => am(source, g),
        Command::HarmBasis(a) => harm_basis_cmd(a, g),
        Command::Hwe(a) => hwe_cmd(a, g),
        Command::Bachoc(a) => bachoc_cmd(a, g),
        Command::Verify(a) => verify(a, g),
    }
}

/// Weight enumerator by enumeration, or through the dual when only the dual is small.
fn wenum_of(code: &BinaryCode, g: &Global) -> Result<Poly4> {
    if enumerable(code, g).is_err() {
        let dual = code.dual();
        if enumerable(&dual, g).is_ok() {
            return dual.weight_enumerator()?.macwilliams().scale_div(&dual.size());
        }
    }
    enumerable(code, g)?;
    code.weight_enumerator()
}

fn print_code(label: &str, code: &BinaryCode, out: &CodeOutput, g: &Global) -> Result<Outcome> {
    let we = if out.wenum {
        Some(wenum_of(code, g)?)
    } else {
        None
    };
    let matrix = !out.wenum && !out.dim;
    emit(
        g,
        || {
            let mut lines = Vec::new();
            if out.dim {
                lines.push(code.dimension().to_string());
            }
            if let Some(we) = &we {
                lines.push(we.to_string());
            }
            if matrix {
                lines.push(format_generator_matrix(code).trim_end().to_string());
            }
            lines.join("\n")
        },
        || {
            let mut v = json!({ "code": label, "n": code.len(), "k": code.dimension() });
            if let Some(we) = &we {
                v["wenum"] = poly_json(we);
            }
            if matrix {
                v["generators"] = json!(code.generators().iter().map(|c| c.to_string()).collect::<Vec<_>>());
            }
            v
        },
    );
    Ok(Outcome::Ok)
}

fn code(cmd: &CodeCmd, g: &Global) -> Result<Outcome> {
    match cmd {
        CodeCmd::Rm1 { m, out } => print_code(&format!("RM(1,{m})"), &reed_muller_1(*m)?, out, g),
        CodeCmd::Ehamming { m, out } => {
            let code = extended_hamming(*m)?;
            print_code(&format!("H_{}", code.len()), &code, out, g)
        }
        CodeCmd::Dual { source, out } => {
            let l = load(source)?;
            print_code(&format!("dual of {}", l.label), &l.code.dual(), out, g)
        }
        CodeCmd::Wenum { source } => {
            let l = load(source)?;
            let we = wenum_of(&l.code, g)?;
            emit(g, || we.to_string(), || json!({ "code": l.label, "wenum": poly_json(&we) }));
            Ok(Outcome::Ok)
        }
        CodeCmd::Shell { source, ell } => {
            let l = load(source)?;
            enumerable(&l.code, g)?;
            let b = l.code.shell(*ell)?;
            emit(
                g,
                || format_block_set(&b).trim_end_matches('\n').to_string(),
                || json!({ "code": l.label, "n": b.points(), "ell": ell, "blocks": b.blocks() }),
            );
            Ok(Outcome::Ok)
        }
    }
}

fn log2_length(code: &BinaryCode) -> Option<usize> {
    let n = code.len();
    (n.is_power_of_two() && n >= 8).then(|| n.trailing_zeros() as usize)
}

fn jacobi_cmd(a: &JacobiArgs, g: &Global) -> Result<Outcome> {
    let l = load(&a.source)?;
    let class_arg: Option<TClass> = a.class.as_deref().map(str::parse).transpose()?;
    let t: Vec<usize> = match (&a.t, class_arg) {
        (Some(t), _) => t.clone(),
        (None, Some(class)) => {
            let m = log2_length(&l.code).ok_or_else(|| usage("--class needs a code of length 2^m, m >= 3"))?;
            FourSet::canonical(m, class)?.points().to_vec()
        }
        (None, None) => return Err(usage("give --t or --class")),
    };

    let closed = if a.closed || a.check {
        let class = match class_arg {
            Some(c) => c,
            None => {
                let m = log2_length(&l.code).ok_or_else(|| usage("closed forms need length 2^m"))?;
                let pts: [usize; 4] =
                    t.clone().try_into().map_err(|_| usage("closed forms need a 4-point reference set"))?;
                classify_four_set(&FourSet::new(m, pts)?)
            }
        };
        Some(match l.known {
            Known::Rm1(m) => rm1_jacobi_closed(m, class)?,
            Known::Hamming(m) => rm1_dual_jacobi_closed(m, class)?,
            Known::Other => return Err(usage("closed forms exist only for --rm1 and --ehamming")),
        })
    } else {
        None
    };

    if a.closed {
        let p = closed.expect("computed above");
        emit(g, || p.to_string(), || json!({ "code": l.label, "T": t, "closed": poly_json(&p) }));
        return Ok(Outcome::Ok);
    }

    enumerable(&l.code, g)?;
    let j = jacobi(&l.code, &t)?;
    let transform = if a.transform { Some(jacobi_transform(&j, &l.code.size(), true)?) } else { None };

    if let Some(c) = closed {
        let diff = &j - &c;
        let ok = diff.is_zero();
        emit(
            g,
            || if ok { "OK".to_string() } else { format!("MISMATCH: enumeration - closed form = {diff}") },
            || json!({ "code": l.label, "T": t, "ok": ok, "difference": poly_json(&diff) }),
        );
        return Ok(if ok { Outcome::Ok } else { Outcome::Failed });
    }

    emit(
        g,
        || match &transform {
            Some(d) => format!("{j}\n{d}"),
            None => j.to_string(),
        },
        || {
            let mut v = json!({ "code": l.label, "T": t, "jacobi": poly_json(&j) });
            if let Some(d) = &transform {
                v["transform"] = poly_json(d);
            }
            v
        },
    );
    Ok(Outcome::Ok)
}

fn print_report(g: &Global, label: &str, ell: Option<usize>, r: &DesignReport) {
    emit(
        g,
        || match ell {
            Some(e) => format!("{label} ell={e} {r}"),
            None => format!("{label} {r}"),
        },
        || r.to_json(label, ell),
    );
}

fn agree(reports: &[DesignReport]) -> bool {
    reports.iter().all(|r| r.is_design == reports[0].is_design && r.lambda == reports[0].lambda)
}

fn design_check(a: &DesignArgs, g: &Global) -> Result<Outcome> {
    let lim = limits(g);
    let mut consistent = true;
    if let Some(path) = &a.blocks {
        if a.method == MethodArg::Jacobi {
            return Err(usage("the jacobi method needs a code, not a block file"));
        }
        let b = parse_block_set(&read(path)?, a.n)?;
        let label = path.display().to_string();
        for &t in &a.t {
            let mut rs = Vec::new();
            if matches!(a.method, MethodArg::Direct | MethodArg::All) {
                rs.push(is_t_design(&b, t, lim.subset_cap)?);
            }
            if matches!(a.method, MethodArg::Delsarte | MethodArg::All) {
                rs.push(delsarte_test(&b, t, lim.subset_cap)?);
            }
            rs.iter().for_each(|r| print_report(g, &label, None, r));
            consistent &= agree(&rs);
        }
    } else {
        let l = load(&a.source)?;
        enumerable(&l.code, g)?;
        let ells: Vec<usize> = match &a.ell {
            Some(e) => e.clone(),
            None => l
                .code
                .weight_distribution()?
                .iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .map(|(i, _)| i)
                .collect(),
        };
        let mode = match a.sample {
            Some(count) => SampleMode::Sample { count, seed: g.seed },
            None => SampleMode::All,
        };
        for &ell in &ells {
            let b = l.code.shell(ell)?;
            for &t in &a.t {
                let mut rs = Vec::new();
                if matches!(a.method, MethodArg::Direct | MethodArg::All) {
                    rs.push(is_t_design(&b, t, lim.subset_cap)?);
                }
                if matches!(a.method, MethodArg::Delsarte | MethodArg::All) {
                    rs.push(delsarte_test(&b, t, lim.subset_cap)?);
                }
                if matches!(a.method, MethodArg::Jacobi | MethodArg::All) {
                    rs.push(jacobi_design_test(&l.code, ell, t, mode, &lim)?);
                }
                rs.iter().for_each(|r| print_report(g, &l.label, Some(ell), r));
                if !agree(&rs) {
                    eprintln!("rmdesign: methods disagree on {} ell={ell} t={t}", l.label);
                    consistent = false;
                }
            }
        }
    }
    Ok(if consistent { Outcome::Ok } else { Outcome::Failed })
}

fn am(source: &CodeSource, g: &Global) -> Result<Outcome> {
    let l = load(source)?;
    let r = assmus_mattson_t(&l.code, &limits(g))?;
    emit(
        g,
        || {
            let which = match (r.dual_weights_condition, r.code_weights_condition) {
                (true, true) => "both conditions",
                (true, false) => "dual-weight condition",
                (false, true) => "code-weight condition",
                (false, false) => "no condition",
            };
            format!("t = {} ({which}; d = {}, dual d = {})", r.t, r.d, r.d_dual)
        },
        || {
            json!({
                "code": l.label,
                "t": r.t,
                "d": r.d,
                "d_dual": r.d_dual,
                "dual_weights_condition": r.dual_weights_condition,
                "code_weights_condition": r.code_weights_condition,
            })
        },
    );
    Ok(Outcome::Ok)
}

fn harm_basis_cmd(a: &HarmBasisArgs, g: &Global) -> Result<Outcome> {
    let basis = if a.specht { specht_basis(a.n, a.k)? } else { harm_basis(a.n, a.k, g.harm_cap)? };
    emit(
        g,
        || {
            let mut lines = vec![format!("dim Harm_{}({}) = {}", a.k, a.n, basis.len())];
            for (i, f) in basis.iter().enumerate() {
                let terms: Vec<String> = f.as_fn().values().map(|(s, v)| format!("{s:?}={v}")).collect();
                lines.push(format!("f{i}: {}", terms.join(" ")));
            }
            lines.join("\n")
        },
        || {
            json!({
                "n": a.n,
                "k": a.k,
                "dimension": basis.len(),
                "basis": basis.iter().map(|f| serde_json::to_value(f.as_fn()).expect("serializable")).collect::<Vec<_>>(),
            })
        },
    );
    Ok(Outcome::Ok)
}

fn load_function(src: &FunctionSource, n: usize) -> Result<HarmonicFn> {
    if let Some(path) = &src.f {
        let f = SubsetFn::from_json(&read(path)?)?;
        return HarmonicFn::new(f);
    }
    let tau = src.tau.as_ref().ok_or_else(|| usage("give --f or --tau"))?;
    let &[a, b] = tau.as_slice() else {
        return Err(usage("--tau takes two indices a,b"));
    };
    if n == 8 && src.subspace.is_none() {
        return corollary_f((a, b), None);
    }
    if !n.is_power_of_two() || n < 8 {
        return Err(usage("the H_8 block function needs a code of length 2^m, m >= 3"));
    }
    let m = n.trailing_zeros() as usize;
    let u = match &src.subspace {
        Some(v) => {
            let basis: [usize; 3] = v.clone().try_into().map_err(|_| usage("--subspace takes three vectors"))?;
            Subspace3::new(m, basis)?
        }
        None => Subspace3::standard(m)?,
    };
    corollary_f((a, b), Some(&u))
}

fn hwe_cmd(a: &HweArgs, g: &Global) -> Result<Outcome> {
    let l = load(&a.source)?;
    enumerable(&l.code, g)?;
    let f = load_function(&a.function, l.code.len())?;
    let w = hwe(&l.code, &f)?;
    if !a.check_dual {
        emit(g, || w.to_string(), || json!({ "code": l.label, "k": f.degree(), "hwe": poly_json(&w) }));
        return Ok(Outcome::Ok);
    }
    let dual = l.code.dual();
    enumerable(&dual, g)?;
    let transformed = bachoc_transform(&w, l.code.len(), f.degree(), &l.code.size())?;
    let direct = hwe(&dual, &f)?;
    let ok = transformed == direct;
    emit(
        g,
        || {
            let verdict = if ok { "OK" } else { "MISMATCH" };
            format!("{w}\n{transformed}\n{verdict}")
        },
        || {
            json!({
                "code": l.label,
                "k": f.degree(),
                "hwe": poly_json(&w),
                "dual_hwe": poly_json(&transformed),
                "dual_enumerated": poly_json(&direct),
                "ok": ok,
            })
        },
    );
    Ok(if ok { Outcome::Ok } else { Outcome::Failed })
}

fn bachoc_cmd(a: &BachocArgs, g: &Global) -> Result<Outcome> {
    let p: Poly4 = a.poly.parse()?;
    let size: BigInt = a.size.parse().map_err(|_| usage(format!("bad code size '{}'", a.size)))?;
    let d = bachoc_transform(&p, a.n, a.k, &size)?;
    emit(g, || d.to_string(), || json!({ "dual_hwe": poly_json(&d) }));
    Ok(Outcome::Ok)
}

fn verify(a: &VerifyArgs, g: &Global) -> Result<Outcome> {
    let target: Target = a.target.parse()?;
    let route: Route = a.route.parse()?;
    let opts = CheckOptions {
        m: a.m.clone(),
        slow: a.slow,
        seed: g.seed,
        samples: a.samples,
        route,
        limits: limits(g),
        ..CheckOptions::default()
    };
    let results = checks::run(target, &opts)?;
    match g.format {
        Format::Text => print!("{}", checks::render_text(&results)),
        Format::Json => println!("{}", checks::render_json(&results)),
    }
    for r in results.iter().filter(|r| r.failed()) {
        eprintln!("rmdesign: failed: {} {}", r.target.name(), r.name);
    }
    Ok(if results.iter().any(|r| r.failed()) { Outcome::Failed } else { Outcome::Ok })
}
