//! Figure-data emission: each figure id maps to exactly one
//! (channel, input family, sweep axes) tuple, evaluated numerically on an
//! `N × N` lattice and serialized as CSV (12 significant digits,
//! scientific notation, `,` delimiter, `\n` line endings, header first).

use imaglab_core::{
    canonical_state, decay_numeric, deimaginary_power_numeric, density_from_pure, CanonicalPattern,
    ChannelId, DensityOperator, MeasureKind, Result,
};

/// Formats one CSV cell: 12 significant digits, scientific notation, with
/// negative zero normalized so equal values are byte-identical.
fn cell(v: f64) -> String {
    let v = if v == 0.0 { 0.0 } else { v };
    format!("{v:.11e}")
}

fn grid_points(n: usize) -> Vec<f64> {
    (0..n).map(|k| k as f64 / (n - 1) as f64).collect()
}

type ChannelAt = Box<dyn Fn(f64, f64) -> ChannelId>;

/// What a figure sweeps and how each lattice cell is evaluated.
enum Surface {
    /// Imaginarity decay ΔI on a canonical input. The channel is built from
    /// the two swept values; the input state comes from `fixed_a` when the
    /// figure fixes a slice, otherwise from the first swept axis.
    Decay {
        channel: ChannelAt,
        pattern: CanonicalPattern,
        fixed_a: Option<f64>,
    },
    /// De-imaginary power 𝒟 of a two-qubit channel built from the two
    /// swept values.
    Power { channel: ChannelAt },
}

struct Figure {
    axes: [&'static str; 2],
    surface: Surface,
    /// Rows whose swept values fail this predicate are omitted (the
    /// combined-damping channel only exists on p1 + p2 ≤ 1).
    keep: fn(f64, f64) -> bool,
}

fn keep_all(_: f64, _: f64) -> bool {
    true
}

/// Resolves a figure id to its frozen sweep definition. `fixed_a` is the
/// `--A` slice for the figures that take one; `gad_p1` is the generalized
/// amplitude damping mixing parameter fig2 holds fixed.
fn figure(id: &str, fixed_a: f64, gad_p1: f64) -> Option<Figure> {
    let fig = match id {
        "fig1" => Figure {
            axes: ["A", "p"],
            surface: Surface::Decay {
                channel: Box::new(|_a, p| ChannelId::Dephasing { p }),
                pattern: CanonicalPattern::Qubit01,
                fixed_a: None,
            },
            keep: keep_all,
        },
        "fig2" => Figure {
            axes: ["A", "p2"],
            surface: Surface::Decay {
                channel: Box::new(move |_a, p2| ChannelId::Gad { p1: gad_p1, p2 }),
                pattern: CanonicalPattern::Qubit01,
                fixed_a: None,
            },
            keep: keep_all,
        },
        "fig3" => Figure {
            axes: ["p1", "p2"],
            surface: Surface::Decay {
                channel: Box::new(|p1, p2| ChannelId::Pad1 { p1, p2 }),
                pattern: CanonicalPattern::Qubit01,
                fixed_a: Some(fixed_a),
            },
            keep: |p1, p2| p1 + p2 <= 1.0 + 1e-12,
        },
        "fig4" => Figure {
            axes: ["p1", "p2"],
            surface: Surface::Decay {
                channel: Box::new(|p1, p2| ChannelId::Bf2 { p1, p2 }),
                pattern: CanonicalPattern::TwoQubit00_11,
                fixed_a: Some(fixed_a),
            },
            keep: keep_all,
        },
        "fig5" => Figure {
            axes: ["A", "gamma"],
            surface: Surface::Decay {
                channel: Box::new(|_a, g| ChannelId::Ad2 { g1: g, g2: g }),
                pattern: CanonicalPattern::TwoQubit01_10,
                fixed_a: None,
            },
            keep: keep_all,
        },
        "fig6" => Figure {
            axes: ["g1", "g2"],
            surface: Surface::Power {
                channel: Box::new(|g1, g2| ChannelId::Pd2 { g1, g2 }),
            },
            keep: keep_all,
        },
        "fig7" => Figure {
            axes: ["p1", "p2"],
            surface: Surface::Power {
                channel: Box::new(|p1, p2| ChannelId::Bf2 { p1, p2 }),
            },
            keep: keep_all,
        },
        "fig8" => Figure {
            axes: ["g1", "g2"],
            surface: Surface::Power {
                channel: Box::new(|g1, g2| ChannelId::Ad2 { g1, g2 }),
            },
            keep: keep_all,
        },
        "fig9" => Figure {
            axes: ["g1", "g2"],
            surface: Surface::Power {
                channel: Box::new(|g1, g2| ChannelId::Pad2 { g1, g2 }),
            },
            keep: keep_all,
        },
        "fig10" => Figure {
            axes: ["p1", "p2"],
            surface: Surface::Power {
                channel: Box::new(|p1, p2| ChannelId::Dep2 { p1, p2 }),
            },
            keep: keep_all,
        },
        _ => return None,
    };
    Some(fig)
}

fn canonical_density(a: f64, pattern: CanonicalPattern) -> Result<DensityOperator> {
    Ok(density_from_pure(&canonical_state(a, pattern)?))
}

/// Whether `id` names a known figure.
pub fn is_known(id: &str) -> bool {
    figure(id, 0.0, 0.5).is_some()
}

/// Whether `id` names a figure that takes the `--A` fixed slice.
pub fn takes_fixed_a(id: &str) -> bool {
    matches!(id, "fig3" | "fig4")
}

/// Whether `id` names the figure that takes the `--p1` mixing slice.
pub fn takes_gad_p1(id: &str) -> bool {
    id == "fig2"
}

/// Builds the full CSV text for a figure. `grid` is the number of points
/// per swept axis; `fixed_a` and `gad_p1` feed the figures that take a
/// fixed slice. Evaluation is numeric throughout: build channel, apply,
/// measure.
pub fn emit(id: &str, grid: usize, fixed_a: f64, gad_p1: f64) -> Result<Option<String>> {
    let Some(fig) = figure(id, fixed_a, gad_p1) else {
        return Ok(None);
    };

    let quantity = match fig.surface {
        Surface::Decay { .. } => "dI",
        Surface::Power { .. } => "D",
    };
    let mut out = String::new();
    out.push_str(&format!(
        "{},{},{q}_l1,{q}_R,{q}_r\n",
        fig.axes[0],
        fig.axes[1],
        q = quantity,
    ));

    let points = grid_points(grid);
    for &x in &points {
        for &y in &points {
            if !(fig.keep)(x, y) {
                continue;
            }
            let mut row = vec![cell(x), cell(y)];
            for kind in MeasureKind::ALL {
                let value = match &fig.surface {
                    Surface::Decay {
                        channel,
                        pattern,
                        fixed_a,
                    } => {
                        let a = fixed_a.unwrap_or(x);
                        let rho = canonical_density(a, *pattern)?;
                        decay_numeric(&channel(x, y), kind, &rho)?.delta
                    }
                    Surface::Power { channel } => {
                        deimaginary_power_numeric(&channel(x, y), kind)?.value
                    }
                };
                row.push(cell(value));
            }
            out.push_str(&row.join(","));
            out.push('\n');
        }
    }
    Ok(Some(out))
}
