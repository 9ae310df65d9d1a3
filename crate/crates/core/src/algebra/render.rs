//! Text renderings of polynomials, lowest degree first.
//!
//! `exponent_scale` lets a polynomial in `s = t²` print in `t`: with scale 2
//! the coefficient of `s^k` is written against `t^{2k}`.

use std::fmt::Display;

use num_traits::{Signed, Zero};

use super::{Coeff, Poly};

fn terms<R>(p: &Poly<R>, exponent_scale: usize) -> Vec<(bool, Option<String>, usize)>
where
    R: Coeff + Signed + Display,
{
    p.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| {
            let neg = c.is_negative();
            let mag = c.abs();
            let e = i * exponent_scale;
            let shown = if e > 0 && mag.is_one() { None } else { Some(mag.to_string()) };
            (neg, shown, e)
        })
        .collect()
}

fn join(parts: Vec<(bool, String)>) -> String {
    let mut out = String::new();
    for (idx, (neg, body)) in parts.into_iter().enumerate() {
        match (idx, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    out
}

/// `1 + 16*t^2 + 16*t^4 + t^6`
pub fn plain<R>(p: &Poly<R>, var: &str, exponent_scale: usize) -> String
where
    R: Coeff + Signed + Display,
{
    if p.is_zero() {
        return "0".to_string();
    }
    let parts = terms(p, exponent_scale)
        .into_iter()
        .map(|(neg, coeff, e)| {
            let power = match e {
                0 => String::new(),
                1 => var.to_string(),
                e => format!("{var}^{e}"),
            };
            let body = match (coeff, e) {
                (Some(c), 0) => c,
                (Some(c), _) => format!("{c}*{power}"),
                (None, _) => power,
            };
            (neg, body)
        })
        .collect();
    join(parts)
}

/// `1 + 16 t^{2} + \frac{1}{2} t^{4}`
pub fn latex<R>(p: &Poly<R>, var: &str, exponent_scale: usize) -> String
where
    R: Coeff + Signed + Display,
{
    if p.is_zero() {
        return "0".to_string();
    }
    let parts = terms(p, exponent_scale)
        .into_iter()
        .map(|(neg, coeff, e)| {
            let coeff = coeff.map(|c| match c.split_once('/') {
                Some((a, b)) => format!("\\frac{{{a}}}{{{b}}}"),
                None => c,
            });
            let power = match e {
                0 => String::new(),
                1 => var.to_string(),
                e => format!("{var}^{{{e}}}"),
            };
            let body = match (coeff, e) {
                (Some(c), 0) => c,
                (Some(c), _) => format!("{c} {power}"),
                (None, _) => power,
            };
            (neg, body)
        })
        .collect();
    join(parts)
}

fn series_text<C>(
    coeffs: &[C],
    var: &str,
    render_coeff: impl Fn(&C) -> (bool, Option<String>),
    power: impl Fn(usize) -> String,
) -> String
where
    C: Zero,
{
    let parts: Vec<(bool, String)> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| {
            let (neg, body) = render_coeff(c);
            let body = match (body, i) {
                (Some(b), 0) => b,
                (None, 0) => "1".to_string(),
                (Some(b), i) => format!("{b}{}", power(i)),
                (None, i) => power(i).trim_start_matches(['*', ' ']).to_string(),
            };
            (neg, body)
        })
        .collect();
    if parts.is_empty() {
        format!("O({var}^{})", coeffs.len())
    } else {
        join(parts)
    }
}

/// Series in `var` with polynomial coefficients in `coeff_var`, e.g.
/// `x - 1/2*x^2 + (1/3 - 1/6*s)*x^3`.
pub fn plain_series<R>(coeffs: &[Poly<R>], var: &str, coeff_var: &str) -> String
where
    R: Coeff + Signed + Display,
{
    series_text(
        coeffs,
        var,
        |p| {
            let single = p.coeffs().iter().filter(|c| !c.is_zero()).count() == 1;
            if single {
                let text = plain(p, coeff_var, 1);
                let (neg, mag) = match text.strip_prefix('-') {
                    Some(m) => (true, m.to_string()),
                    None => (false, text),
                };
                (neg, (mag != "1").then_some(mag))
            } else {
                (false, Some(format!("({})", plain(p, coeff_var, 1))))
            }
        },
        |i| if i == 1 { format!("*{var}") } else { format!("*{var}^{i}") },
    )
}

/// LaTeX form of [`plain_series`].
pub fn latex_series<R>(coeffs: &[Poly<R>], var: &str, coeff_var: &str) -> String
where
    R: Coeff + Signed + Display,
{
    series_text(
        coeffs,
        var,
        |p| {
            let single = p.coeffs().iter().filter(|c| !c.is_zero()).count() == 1;
            if single {
                let text = latex(p, coeff_var, 1);
                let (neg, mag) = match text.strip_prefix('-') {
                    Some(m) => (true, m.to_string()),
                    None => (false, text),
                };
                (neg, (mag != "1").then_some(mag))
            } else {
                (false, Some(format!("\\left({}\\right)", latex(p, coeff_var, 1))))
            }
        },
        |i| if i == 1 { format!(" {var}") } else { format!(" {var}^{{{i}}}") },
    )
}
