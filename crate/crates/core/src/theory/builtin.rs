//! The standard theories, written in the DSL. Families whose number of
//! variables grows with the cursor are expanded up to the bound here;
//! families that only change an exponent or constant stay schemas.

use super::dsl::{parse_theory, Theory};
use crate::{Error, Result};

pub const BUILTIN_NAMES: &[&str] = &[
    "nontrivial",
    "char(n)",
    "char0",
    "t_id",
    "t_rr",
    "t_f",
    "t_acf",
    "t_rf",
    "t_rd",
    "t_pr",
    "t_rcf",
    "real_horn",
    "dp(p)",
];

fn xs(n: u32) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

/// `y^n+x1*y^(n-1)+...+xn`
fn monic(n: u32) -> String {
    let mut s = format!("y^{n}");
    for (i, x) in xs(n).iter().enumerate() {
        match n - 1 - i as u32 {
            0 => s.push_str(&format!("+{x}")),
            1 => s.push_str(&format!("+{x}*y")),
            e => s.push_str(&format!("+{x}*y^{e}")),
        }
    }
    s
}

fn sum_of_squares(vars: &[String]) -> String {
    vars.iter().map(|v| format!("{v}^2")).collect::<Vec<_>>().join("+")
}

/// `forall v1,...,vn ` or nothing.
fn forall(vars: &[String]) -> String {
    if vars.is_empty() {
        String::new()
    } else {
        format!("forall {} ", vars.join(","))
    }
}

const NONTRIVIAL: &str = "@nontrivial (1=0) => false";
const DOMAIN: &str = "@domain forall x,y (x*y=0) => (x=0) \\/ (y=0)";
const INVERSE: &str = "@inverse forall x true => (x=0) \\/ exists y (x*y-1=0)";
const REDUCED: &str = "for n in 1..: @reduced forall x (x^n=0) => (x=0)";
const SQUARE: &str = "@square forall x true => exists y (y^2-x=0) \\/ exists y (y^2+x=0)";

fn roots(degrees: impl Iterator<Item = u32>) -> Vec<String> {
    degrees
        .map(|n| format!("@root{n} {}true => exists y ({}=0)", forall(&xs(n)), monic(n)))
        .collect()
}

fn real(bound: u32) -> Vec<String> {
    (1..=bound)
        .map(|n| format!("@real{n} {}({}=0) => (x1=0)", forall(&xs(n)), sum_of_squares(&xs(n))))
        .collect()
}

fn positive(bound: u32) -> Vec<String> {
    (0..=bound)
        .map(|n| {
            let vs = xs(n);
            let lhs = std::iter::once("1".to_string()).chain(vs.iter().map(|v| format!("{v}^2"))).collect::<Vec<_>>();
            format!("@positive{n} {}({}=0) => false", forall(&vs), lhs.join("+"))
        })
        .collect()
}

fn real_horn(bound: u32) -> Vec<String> {
    let mut out = Vec::new();
    for m in 0..=bound {
        for n in 0..=bound {
            let ys: Vec<String> = (1..=n).map(|i| format!("y{i}")).collect();
            let mut vars = vec!["x".to_string()];
            vars.extend(ys.iter().cloned());
            let mut lhs = format!("x^{}", 2 * m);
            if !ys.is_empty() {
                lhs = format!("{lhs}+{}", sum_of_squares(&ys));
            }
            out.push(format!("@horn{m}_{n} {}({lhs}=0) => (x=0)", forall(&vars)));
        }
    }
    out
}

fn arg(name: &str, prefix: &str) -> Option<u32> {
    let rest = name.strip_prefix(prefix)?;
    let inner = rest
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .or_else(|| rest.strip_prefix('_'))
        .unwrap_or(rest);
    inner.trim().parse().ok()
}

/// A named theory with variable-count families expanded up to `bound`.
/// `char(n)` and `dp(p)` also accept `char_n`/`charn` and `dp_p`/`dpp`.
pub fn builtin(name: &str, bound: u32) -> Result<Theory> {
    let (tname, lines): (String, Vec<String>) = match name {
        "nontrivial" => ("nontrivial".into(), vec![NONTRIVIAL.into()]),
        "char0" => ("char0".into(), vec!["for n in 1..: @char0 (n=0) => false".into()]),
        "t_id" => ("t_id".into(), vec![NONTRIVIAL.into(), DOMAIN.into()]),
        "t_rr" => ("t_rr".into(), vec![REDUCED.into()]),
        "t_f" => ("t_f".into(), vec![NONTRIVIAL.into(), DOMAIN.into(), INVERSE.into()]),
        "t_acf" => {
            let mut l = vec![NONTRIVIAL.into(), DOMAIN.into(), INVERSE.into()];
            l.extend(roots(1..=bound));
            ("t_acf".into(), l)
        }
        "t_rd" => {
            let mut l = vec![NONTRIVIAL.into(), DOMAIN.into()];
            l.extend(real(bound));
            ("t_rd".into(), l)
        }
        "t_rf" => {
            let mut l = vec![NONTRIVIAL.into(), DOMAIN.into(), INVERSE.into()];
            l.extend(real(bound));
            ("t_rf".into(), l)
        }
        "t_pr" => ("t_pr".into(), positive(bound)),
        "t_rcf" => {
            let mut l = vec![NONTRIVIAL.into(), DOMAIN.into(), INVERSE.into()];
            l.extend(real(bound));
            l.push(SQUARE.into());
            l.extend(roots((1..=bound).filter(|n| n % 2 == 1)));
            ("t_rcf".into(), l)
        }
        "real_horn" => ("real_horn".into(), real_horn(bound)),
        other => {
            if let Some(n) = arg(other, "char").filter(|_| other != "char0") {
                (format!("char_{n}"), vec![format!("@char{n} true => ({n}=0)")])
            } else if let Some(p) = arg(other, "dp").filter(|&p| crate::finring::is_prime(p as u64)) {
                let rel = if p == 2 { "z^3*(x^3+2*y^3)-1".to_string() } else { format!("z^2*(x^2+{p}*y^2)-1") };
                (format!("dp_{p}"), vec![format!("@d{p} forall x,y true => exists z ({rel}=0)")])
            } else {
                return Err(Error::invalid(format!(
                    "unknown builtin theory `{other}` (known: {})",
                    BUILTIN_NAMES.join(", ")
                )));
            }
        }
    };
    let src = format!("theory {tname}:\n{}\n", lines.join("\n"));
    parse_theory(&src).map_err(|e| Error::invalid(format!("builtin `{name}` failed to parse: {e}")))
}
