//! Minimal static SVG line plots.
//!
//! Figures are batch artifacts, so this stays a small string generator with
//! deterministic output: fixed palette, fixed viewport, fixed float
//! formatting. Supports linear or log10 y axes and vertical marker lines.

const WIDTH: f64 = 860.0;
const HEIGHT: f64 = 520.0;
const MARGIN_L: f64 = 70.0;
const MARGIN_R: f64 = 180.0;
const MARGIN_T: f64 = 40.0;
const MARGIN_B: f64 = 55.0;

const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f",
];

#[derive(Clone, Debug)]
pub struct Series {
    pub label: String,
    pub points: Vec<(f64, f64)>,
}

impl Series {
    pub fn new(label: impl Into<String>, points: Vec<(f64, f64)>) -> Self {
        Series {
            label: label.into(),
            points,
        }
    }
}

#[derive(Clone, Debug)]
pub struct LinePlot {
    pub title: String,
    pub x_label: String,
    pub y_label: String,
    pub log_y: bool,
    pub log_x: bool,
    pub series: Vec<Series>,
    /// Vertical reference lines `(x, label)`.
    pub markers: Vec<(f64, String)>,
}

impl LinePlot {
    pub fn new(
        title: impl Into<String>,
        x_label: impl Into<String>,
        y_label: impl Into<String>,
    ) -> Self {
        LinePlot {
            title: title.into(),
            x_label: x_label.into(),
            y_label: y_label.into(),
            log_y: false,
            log_x: false,
            series: Vec::new(),
            markers: Vec::new(),
        }
    }

    pub fn to_svg(&self) -> String {
        let tx = |v: f64| if self.log_x { v.log10() } else { v };
        let ty = |v: f64| if self.log_y { v.log10() } else { v };
        let usable = |v: f64, log: bool| v.is_finite() && (!log || v > 0.0);

        let mut xs = Vec::new();
        let mut ys = Vec::new();
        for s in &self.series {
            for &(x, y) in &s.points {
                if usable(x, self.log_x) && usable(y, self.log_y) {
                    xs.push(tx(x));
                    ys.push(ty(y));
                }
            }
        }
        for &(x, _) in &self.markers {
            if usable(x, self.log_x) {
                xs.push(tx(x));
            }
        }
        let (x_min, x_max) = padded_range(&xs);
        let (y_min, y_max) = padded_range(&ys);

        let plot_w = WIDTH - MARGIN_L - MARGIN_R;
        let plot_h = HEIGHT - MARGIN_T - MARGIN_B;
        let px = |x: f64| MARGIN_L + (tx(x) - x_min) / (x_max - x_min) * plot_w;
        let py = |y: f64| MARGIN_T + plot_h - (ty(y) - y_min) / (y_max - y_min) * plot_h;

        let mut svg = String::new();
        svg.push_str(&format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
             viewBox=\"0 0 {WIDTH} {HEIGHT}\" font-family=\"monospace\" font-size=\"12\">\n"
        ));
        svg.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
        svg.push_str(&format!(
            "<text x=\"{:.1}\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">{}</text>\n",
            MARGIN_L + plot_w / 2.0,
            escape(&self.title)
        ));

        // Axes box and ticks.
        svg.push_str(&format!(
            "<rect x=\"{MARGIN_L:.1}\" y=\"{MARGIN_T:.1}\" width=\"{plot_w:.1}\" height=\"{plot_h:.1}\" \
             fill=\"none\" stroke=\"#333\"/>\n"
        ));
        for (frac, value) in tick_positions(x_min, x_max, self.log_x) {
            let x = MARGIN_L + frac * plot_w;
            svg.push_str(&format!(
                "<line x1=\"{x:.1}\" y1=\"{:.1}\" x2=\"{x:.1}\" y2=\"{:.1}\" stroke=\"#ccc\"/>\n",
                MARGIN_T,
                MARGIN_T + plot_h
            ));
            svg.push_str(&format!(
                "<text x=\"{x:.1}\" y=\"{:.1}\" text-anchor=\"middle\">{}</text>\n",
                MARGIN_T + plot_h + 18.0,
                value
            ));
        }
        for (frac, value) in tick_positions(y_min, y_max, self.log_y) {
            let y = MARGIN_T + plot_h - frac * plot_h;
            svg.push_str(&format!(
                "<line x1=\"{:.1}\" y1=\"{y:.1}\" x2=\"{:.1}\" y2=\"{y:.1}\" stroke=\"#ccc\"/>\n",
                MARGIN_L,
                MARGIN_L + plot_w
            ));
            svg.push_str(&format!(
                "<text x=\"{:.1}\" y=\"{:.1}\" text-anchor=\"end\">{}</text>\n",
                MARGIN_L - 6.0,
                y + 4.0,
                value
            ));
        }
        svg.push_str(&format!(
            "<text x=\"{:.1}\" y=\"{:.1}\" text-anchor=\"middle\">{}</text>\n",
            MARGIN_L + plot_w / 2.0,
            HEIGHT - 12.0,
            escape(&self.x_label)
        ));
        svg.push_str(&format!(
            "<text x=\"16\" y=\"{:.1}\" text-anchor=\"middle\" transform=\"rotate(-90 16 {:.1})\">{}</text>\n",
            MARGIN_T + plot_h / 2.0,
            MARGIN_T + plot_h / 2.0,
            escape(&self.y_label)
        ));

        for (x, label) in &self.markers {
            if !usable(*x, self.log_x) {
                continue;
            }
            let xp = px(*x);
            svg.push_str(&format!(
                "<line x1=\"{xp:.1}\" y1=\"{:.1}\" x2=\"{xp:.1}\" y2=\"{:.1}\" stroke=\"#999\" \
                 stroke-dasharray=\"5,4\"/>\n",
                MARGIN_T,
                MARGIN_T + plot_h
            ));
            svg.push_str(&format!(
                "<text x=\"{:.1}\" y=\"{:.1}\" fill=\"#555\">{}</text>\n",
                xp + 4.0,
                MARGIN_T + 14.0,
                escape(label)
            ));
        }

        for (i, s) in self.series.iter().enumerate() {
            let color = PALETTE[i % PALETTE.len()];
            let pts: Vec<String> = s
                .points
                .iter()
                .filter(|(x, y)| usable(*x, self.log_x) && usable(*y, self.log_y))
                .map(|&(x, y)| format!("{:.2},{:.2}", px(x), py(y)))
                .collect();
            if pts.len() >= 2 {
                svg.push_str(&format!(
                    "<polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"1.8\" points=\"{}\"/>\n",
                    pts.join(" ")
                ));
            }
            let ly = MARGIN_T + 16.0 * (i as f64 + 1.0);
            let lx = WIDTH - MARGIN_R + 12.0;
            svg.push_str(&format!(
                "<line x1=\"{lx:.1}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\" stroke=\"{color}\" stroke-width=\"3\"/>\n",
                ly - 4.0,
                lx + 22.0,
                ly - 4.0
            ));
            svg.push_str(&format!(
                "<text x=\"{:.1}\" y=\"{ly:.1}\">{}</text>\n",
                lx + 28.0,
                escape(&s.label)
            ));
        }

        svg.push_str("</svg>\n");
        svg
    }
}

fn padded_range(values: &[f64]) -> (f64, f64) {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for &v in values {
        lo = lo.min(v);
        hi = hi.max(v);
    }
    if !lo.is_finite() || !hi.is_finite() {
        return (0.0, 1.0);
    }
    if lo == hi {
        return (lo - 0.5, hi + 0.5);
    }
    let pad = (hi - lo) * 0.04;
    (lo - pad, hi + pad)
}

/// Up to ~8 round-valued ticks as (fraction along axis, label).
fn tick_positions(lo: f64, hi: f64, log: bool) -> Vec<(f64, String)> {
    let span = hi - lo;
    let raw_step = span / 7.0;
    let mag = 10f64.powf(raw_step.log10().floor());
    let step = [1.0, 2.0, 5.0, 10.0]
        .iter()
        .map(|m| m * mag)
        .find(|&s| s >= raw_step)
        .unwrap_or(mag * 10.0);
    let mut ticks = Vec::new();
    let mut v = (lo / step).ceil() * step;
    while v <= hi + 1e-12 * span {
        let frac = (v - lo) / span;
        let label = if log {
            format!("1e{}", format_tick(v))
        } else {
            format_tick(v)
        };
        ticks.push((frac, label));
        v += step;
    }
    ticks
}

fn format_tick(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    let rounded = (v * 1e6).round() / 1e6;
    if rounded == rounded.trunc() && rounded.abs() < 1e7 {
        format!("{}", rounded as i64)
    } else {
        format!("{rounded}")
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}
