//! Self-contained SVG plots of the counting and Weyl functions.
//!
//! The counting function is drawn as a right-continuous step curve with
//! explicit horizontal and vertical segments; the Weyl curve is sampled
//! densely.  Floating point is used for pixel placement only; the data
//! behind the plot comes from the exact scan.

use num_traits::ToPrimitive;

use sphere_weyl::spectrum::{distinct_eigenvalue, spectrum_entries, SphereDim};
use sphere_weyl::weyl::WeylFunction;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 420.0;
const MARGIN_LEFT: f64 = 84.0;
const MARGIN_RIGHT: f64 = 20.0;
const MARGIN_TOP: f64 = 46.0;
const MARGIN_BOTTOM: f64 = 52.0;
const WEYL_SAMPLES: u32 = 256;

fn axis_label(value: f64, scientific: bool) -> String {
    if scientific {
        format!("{value:.2e}")
    } else if value >= 1000.0 {
        format!("{value:.0}")
    } else {
        format!("{value:.4}")
            .trim_end_matches('0')
            .trim_end_matches('.')
            .to_string()
    }
}

/// Renders the plot for `S^n` up to index `k_max`.
pub fn plot_svg(dim: SphereDim, k_max: u64) -> String {
    let entries = spectrum_entries(dim, k_max);
    let weyl = WeylFunction::new(dim);
    // The step function is known on [0, v_(k_max + 1)): plot that range.
    let x_max = distinct_eigenvalue(dim, k_max + 1)
        .to_f64()
        .expect("eigenvalue fits in f64 range");
    let n_top = entries
        .last()
        .expect("at least one entry")
        .cumulative
        .to_f64()
        .expect("count fits in f64 range");
    let y_data_max = n_top.max(weyl.eval_f64(x_max));
    let y_max = y_data_max * 1.05;
    let scientific = y_data_max >= 1.0e7;

    let plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    let px = |x: f64| MARGIN_LEFT + x / x_max * plot_w;
    let py = |y: f64| HEIGHT - MARGIN_BOTTOM - y / y_max * plot_h;

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{WIDTH:.0}\" height=\"{HEIGHT:.0}\" viewBox=\"0 0 {WIDTH:.0} {HEIGHT:.0}\">\n"
    ));
    svg.push_str(&format!(
        "<!-- sphere-weyl plot generator v{} -->\n",
        env!("CARGO_PKG_VERSION")
    ));
    svg.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    svg.push_str(&format!(
        "<text x=\"{:.1}\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\" text-anchor=\"middle\">S^{}: counting function N and Weyl function w</text>\n",
        WIDTH / 2.0,
        dim.get()
    ));

    // Axes.
    svg.push_str(&format!(
        "<line x1=\"{:.1}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\" stroke=\"black\"/>\n",
        MARGIN_LEFT,
        HEIGHT - MARGIN_BOTTOM,
        WIDTH - MARGIN_RIGHT,
        HEIGHT - MARGIN_BOTTOM
    ));
    svg.push_str(&format!(
        "<line x1=\"{:.1}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\" stroke=\"black\"/>\n",
        MARGIN_LEFT,
        MARGIN_TOP,
        MARGIN_LEFT,
        HEIGHT - MARGIN_BOTTOM
    ));

    // Ticks and labels.
    for i in 0..=4u32 {
        let fx = x_max * f64::from(i) / 4.0;
        let x_pix = px(fx);
        svg.push_str(&format!(
            "<line x1=\"{x_pix:.1}\" y1=\"{:.1}\" x2=\"{x_pix:.1}\" y2=\"{:.1}\" stroke=\"black\"/>\n",
            HEIGHT - MARGIN_BOTTOM,
            HEIGHT - MARGIN_BOTTOM + 5.0
        ));
        svg.push_str(&format!(
            "<text x=\"{x_pix:.1}\" y=\"{:.1}\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">{}</text>\n",
            HEIGHT - MARGIN_BOTTOM + 18.0,
            axis_label(fx, x_max >= 1.0e7)
        ));

        let fy = y_max * f64::from(i) / 4.0;
        let y_pix = py(fy);
        svg.push_str(&format!(
            "<line x1=\"{:.1}\" y1=\"{y_pix:.1}\" x2=\"{:.1}\" y2=\"{y_pix:.1}\" stroke=\"black\"/>\n",
            MARGIN_LEFT - 5.0,
            MARGIN_LEFT
        ));
        svg.push_str(&format!(
            "<text x=\"{:.1}\" y=\"{:.1}\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">{}</text>\n",
            MARGIN_LEFT - 8.0,
            y_pix + 4.0,
            axis_label(fy, scientific)
        ));
    }
    svg.push_str(&format!(
        "<text x=\"{:.1}\" y=\"{:.1}\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">eigenvalue x</text>\n",
        MARGIN_LEFT + plot_w / 2.0,
        HEIGHT - 12.0
    ));
    svg.push_str(&format!(
        "<text x=\"18\" y=\"{:.1}\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 18 {:.1})\">count</text>\n",
        MARGIN_TOP + plot_h / 2.0,
        MARGIN_TOP + plot_h / 2.0
    ));

    // Counting function: horizontal plateau on [v_k, v_(k+1)), vertical
    // jump at each node.
    let mut step = String::new();
    for (idx, entry) in entries.iter().enumerate() {
        let x = entry.eigenvalue.to_f64().expect("eigenvalue fits f64");
        let y = entry.cumulative.to_f64().expect("count fits f64");
        if idx == 0 {
            step.push_str(&format!("M {:.2} {:.2}", px(x), py(y)));
        } else {
            step.push_str(&format!(" H {:.2} V {:.2}", px(x), py(y)));
        }
    }
    step.push_str(&format!(" H {:.2}", px(x_max)));
    svg.push_str(&format!(
        "<path d=\"{step}\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.6\"/>\n"
    ));

    // Weyl curve.
    let mut curve = String::new();
    for i in 0..=WEYL_SAMPLES {
        let x = x_max * f64::from(i) / f64::from(WEYL_SAMPLES);
        if i > 0 {
            curve.push(' ');
        }
        curve.push_str(&format!("{:.2},{:.2}", px(x), py(weyl.eval_f64(x))));
    }
    svg.push_str(&format!(
        "<polyline points=\"{curve}\" fill=\"none\" stroke=\"#c23b22\" stroke-width=\"1.6\"/>\n"
    ));

    // Legend.
    let lx = MARGIN_LEFT + 14.0;
    let ly = MARGIN_TOP + 10.0;
    svg.push_str(&format!(
        "<line x1=\"{lx:.1}\" y1=\"{ly:.1}\" x2=\"{:.1}\" y2=\"{ly:.1}\" stroke=\"#1f4e9c\" stroke-width=\"1.6\"/>\n",
        lx + 28.0
    ));
    svg.push_str(&format!(
        "<text x=\"{:.1}\" y=\"{:.1}\" font-family=\"sans-serif\" font-size=\"12\">N (counting function)</text>\n",
        lx + 34.0,
        ly + 4.0
    ));
    svg.push_str(&format!(
        "<line x1=\"{lx:.1}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\" stroke=\"#c23b22\" stroke-width=\"1.6\"/>\n",
        ly + 18.0,
        lx + 28.0,
        ly + 18.0
    ));
    svg.push_str(&format!(
        "<text x=\"{:.1}\" y=\"{:.1}\" font-family=\"sans-serif\" font-size=\"12\">w (Weyl function)</text>\n",
        lx + 34.0,
        ly + 22.0
    ));

    svg.push_str("</svg>\n");
    svg
}
