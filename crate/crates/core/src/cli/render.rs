//! Text output for diagrams and decompositions.

use crate::betti::BettiDiagram;
use crate::decompose::Decomposition;
use crate::Rational;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Normalization {
    /// Coefficients against the smallest-integer pure diagrams.
    #[default]
    Lcm,
    /// Coefficients against pure diagrams scaled to `lambda = 1`.
    Unit,
}

/// Rows labelled `j - i`, columns `i`, `-` for zero.
pub fn render_betti(b: &BettiDiagram) -> String {
    let cols = b.max_index().map_or(0, |m| m + 1);
    let rows: Vec<i64> = b.entries().map(|(&(i, j), _)| j as i64 - i as i64).collect();
    let (lo, hi) = (rows.iter().min().copied(), rows.iter().max().copied());

    let mut grid: Vec<(String, Vec<String>)> = Vec::new();
    if let (Some(lo), Some(hi)) = (lo, hi) {
        for r in lo..=hi {
            let cells = (0..cols)
                .map(|i| {
                    let v = b.get(i, (r + i as i64) as u32);
                    if v == Rational::from_integer(0.into()) {
                        "-".to_string()
                    } else {
                        v.to_string()
                    }
                })
                .collect();
            grid.push((r.to_string(), cells));
        }
    }
    let label_w = grid.iter().map(|(l, _)| l.len()).max().unwrap_or(0).max(3);
    let widths: Vec<usize> = (0..cols)
        .map(|i| grid.iter().map(|(_, c)| c[i].len()).chain([i.to_string().len()]).max().unwrap_or(1))
        .collect();

    let mut out = format!("{:>label_w$} |", "");
    for (i, w) in widths.iter().enumerate() {
        out += &format!(" {i:>w$}");
    }
    out += "\n";
    out += &"-".repeat(label_w + 1);
    out += "+";
    out += &"-".repeat(widths.iter().map(|w| w + 1).sum());
    out += "\n";
    for (label, cells) in &grid {
        out += &format!("{label:>label_w$} |");
        for (c, w) in cells.iter().zip(&widths) {
            out += &format!(" {c:>w$}");
        }
        out += "\n";
    }
    out
}

fn coefficient(s: &crate::decompose::Summand, norm: Normalization) -> Rational {
    match norm {
        Normalization::Lcm => s.coeff.clone(),
        Normalization::Unit => s.unit_coeff(),
    }
}

/// Human form `c pi(d0,...)`, or machine form `p/q<TAB>d0,...`.
pub fn render_decomposition(d: &Decomposition, norm: Normalization, machine: bool) -> String {
    let mut out = String::new();
    for s in &d.summands {
        let c = coefficient(s, norm);
        if machine {
            let degrees: Vec<String> = s.seq.degrees().iter().map(u32::to_string).collect();
            out += &format!("{}/{}\t{}\n", c.numer(), c.denom(), degrees.join(","));
        } else {
            out += &format!("{c} pi{}\n", s.seq);
        }
    }
    out
}
