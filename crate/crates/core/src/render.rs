//! Deterministic SVG and TikZ figures of the subset-to-triangle map.
//!
//! [`layout`] turns a [`FigureSpec`] into a [`Scene`] of primitives in screen
//! units (y grows downward). [`emit`] serializes a scene. Numbers are printed
//! with four fractional digits so output is byte-stable.

use std::fmt::Write as _;

use crate::bijection::{encode, subset_to_gaps, triangle_to_params, Subset4};
use crate::error::Result;
use crate::lattice::{GridSpec, LatticePoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Svg,
    Tikz,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FigureSpec {
    pub grid: GridSpec,
    pub subset: Option<Subset4>,
    pub show_circumscribed: bool,
    pub show_gap_strip: bool,
    pub format: Format,
    /// Screen units per lattice edge.
    pub scale: f64,
}

impl FigureSpec {
    pub fn new(grid: GridSpec) -> Self {
        FigureSpec {
            grid,
            subset: None,
            show_circumscribed: false,
            show_gap_strip: false,
            format: Format::Svg,
            scale: 40.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    GridLine,
    GridDot,
    Triangle,
    Circumscriber,
    StripLine,
    StripTick,
    StripMark,
    Brace,
    Label,
}

/// Colors and strokes for each role. Widths are fractions of the scale.
#[derive(Debug, Clone, Copy)]
pub struct Style {
    pub stroke: Option<&'static str>,
    pub fill: Option<&'static str>,
    pub width: f64,
    pub dashed: bool,
}

const NEUTRAL: &str = "#4a4a4a";
const FAINT: &str = "#d4d4d4";
const ACCENT: &str = "#d9480f";
const ACCENT_FILL: &str = "#fcd9c2";
const OUTLINE: &str = "#1c6fb8";
const WHITE: &str = "#ffffff";
const INK: &str = "#222222";

const PALETTE: [(&str, &str); 7] = [
    (NEUTRAL, "tgneutral"),
    (FAINT, "tgfaint"),
    (ACCENT, "tgaccent"),
    (ACCENT_FILL, "tgaccentfill"),
    (OUTLINE, "tgoutline"),
    (WHITE, "tgwhite"),
    (INK, "tgink"),
];

pub fn style(role: Role) -> Style {
    let s = |stroke, fill, width, dashed| Style {
        stroke,
        fill,
        width,
        dashed,
    };
    match role {
        Role::GridLine => s(Some(FAINT), None, 0.02, false),
        Role::GridDot => s(None, Some(NEUTRAL), 0.0, false),
        Role::Triangle => s(Some(ACCENT), Some(ACCENT_FILL), 0.05, false),
        Role::Circumscriber => s(Some(OUTLINE), None, 0.035, true),
        Role::StripLine => s(Some(NEUTRAL), None, 0.025, false),
        Role::StripTick => s(Some(NEUTRAL), Some(WHITE), 0.025, false),
        Role::StripMark => s(Some(ACCENT), Some(ACCENT), 0.025, false),
        Role::Brace => s(Some(OUTLINE), None, 0.025, false),
        Role::Label => s(None, Some(INK), 0.0, false),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Item {
    Line {
        from: (f64, f64),
        to: (f64, f64),
        role: Role,
    },
    Dot {
        at: (f64, f64),
        radius: f64,
        role: Role,
    },
    Polygon {
        points: Vec<(f64, f64)>,
        role: Role,
    },
    Polyline {
        points: Vec<(f64, f64)>,
        role: Role,
    },
    Text {
        at: (f64, f64),
        text: String,
        size: f64,
        role: Role,
    },
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Scene {
    pub scale: f64,
    pub items: Vec<Item>,
}

impl Scene {
    /// `(min_x, min_y, width, height)` covering every item with a small margin.
    /// Text extent is estimated from the glyph count.
    pub fn view_box(&self) -> (f64, f64, f64, f64) {
        let mut bounds: Option<(f64, f64, f64, f64)> = None;
        let mut grow = |x: f64, y: f64| {
            bounds = Some(match bounds {
                None => (x, y, x, y),
                Some((x0, y0, x1, y1)) => (x0.min(x), y0.min(y), x1.max(x), y1.max(y)),
            });
        };
        for item in &self.items {
            match item {
                Item::Line { from, to, .. } => {
                    grow(from.0, from.1);
                    grow(to.0, to.1);
                }
                Item::Dot { at, radius, .. } => {
                    grow(at.0 - radius, at.1 - radius);
                    grow(at.0 + radius, at.1 + radius);
                }
                Item::Polygon { points, .. } | Item::Polyline { points, .. } => {
                    for p in points {
                        grow(p.0, p.1);
                    }
                }
                Item::Text { at, text, size, .. } => {
                    let half = 0.3 * size * text.chars().count() as f64;
                    grow(at.0 - half, at.1 - size);
                    grow(at.0 + half, at.1 + 0.3 * size);
                }
            }
        }
        match bounds {
            None => (0.0, 0.0, 0.0, 0.0),
            Some((x0, y0, x1, y1)) => {
                let pad = 0.3 * self.scale;
                (x0 - pad, y0 - pad, x1 - x0 + 2.0 * pad, y1 - y0 + 2.0 * pad)
            }
        }
    }

    /// Screen positions of all rendered grid dots.
    pub fn dot_positions(&self) -> Vec<(f64, f64)> {
        self.items
            .iter()
            .filter_map(|item| match item {
                Item::Dot {
                    at,
                    role: Role::GridDot,
                    ..
                } => Some(*at),
                _ => None,
            })
            .collect()
    }
}

const MARGIN: f64 = 0.6;

struct Frame {
    scale: f64,
    height: f64,
}

impl Frame {
    fn place(&self, p: LatticePoint) -> (f64, f64) {
        let (cx, cy) = p.to_cartesian();
        self.screen(cx, cy)
    }

    /// Cartesian lattice units to screen units.
    fn screen(&self, cx: f64, cy: f64) -> (f64, f64) {
        (
            (MARGIN + cx) * self.scale,
            (MARGIN + self.height - cy) * self.scale,
        )
    }
}

/// Builds the scene: lattice lines, grid dots, then the optional dashed
/// circumscriber, the highlighted triangle, and the number-line strip with
/// its gap braces below the grid.
pub fn layout(spec: &FigureSpec) -> Result<Scene> {
    let grid = &spec.grid;
    let side = grid.side();
    let frame = Frame {
        scale: spec.scale,
        height: side as f64 * 3f64.sqrt() / 2.0,
    };
    let mut items = Vec::new();

    for k in 0..side {
        let lines = [
            (LatticePoint::new(0, k), LatticePoint::new(side - k, k)),
            (LatticePoint::new(k, 0), LatticePoint::new(k, side - k)),
            (
                LatticePoint::new(side - k, 0),
                LatticePoint::new(0, side - k),
            ),
        ];
        for (a, b) in lines {
            items.push(Item::Line {
                from: frame.place(a),
                to: frame.place(b),
                role: Role::GridLine,
            });
        }
    }
    let dot = 0.09 * spec.scale;
    for p in grid.points() {
        items.push(Item::Dot {
            at: frame.place(p),
            radius: dot,
            role: Role::GridDot,
        });
    }

    if let Some(subset) = spec.subset {
        let triangle = encode(subset, grid)?;
        if spec.show_circumscribed {
            let params = triangle_to_params(&triangle, grid)?;
            let points = params
                .circumscriber()
                .iter()
                .map(|&p| frame.place(p))
                .collect();
            items.push(Item::Polygon {
                points,
                role: Role::Circumscriber,
            });
        }
        let points = triangle
            .vertices()
            .iter()
            .map(|&p| frame.place(p))
            .collect();
        items.push(Item::Polygon {
            points,
            role: Role::Triangle,
        });

        if spec.show_gap_strip {
            gap_strip(spec, subset, &frame, &mut items)?;
        }
    }

    Ok(Scene {
        scale: spec.scale,
        items,
    })
}

fn gap_strip(
    spec: &FigureSpec,
    subset: Subset4,
    frame: &Frame,
    items: &mut Vec<Item>,
) -> Result<()> {
    let grid = &spec.grid;
    let count = grid.n() + 2;
    let step = grid.side() as f64 / (grid.n() + 1) as f64;
    let x_of = |i: f64| frame.screen((i - 1.0) * step, 0.0).0;
    let row = |depth: f64| frame.screen(0.0, -depth).1;
    let font = 0.3 * spec.scale;

    let line_y = row(0.9);
    items.push(Item::Line {
        from: (x_of(1.0), line_y),
        to: (x_of(count as f64), line_y),
        role: Role::StripLine,
    });
    let chosen = subset.elements();
    for i in 1..=count {
        let role = if chosen.contains(&i) {
            Role::StripMark
        } else {
            Role::StripTick
        };
        let at = (x_of(i as f64), line_y);
        items.push(Item::Dot {
            at,
            radius: 0.11 * spec.scale,
            role,
        });
        items.push(Item::Text {
            at: (at.0, row(1.35)),
            text: i.to_string(),
            size: font,
            role: Role::Label,
        });
    }

    let gaps = subset_to_gaps(subset, grid)?.gaps();
    let bounds = [0, chosen[0], chosen[1], chosen[2], chosen[3], count + 1];
    let (brace_top, brace_drop) = (row(1.55), 0.15 * spec.scale);
    for (j, gap) in gaps.iter().enumerate() {
        let (lo, hi) = (bounds[j] as f64, bounds[j + 1] as f64);
        let centre = x_of((lo + hi) / 2.0);
        if *gap > 0 {
            let pad = 0.3 * step;
            let (x0, x1) = (x_of(lo + 1.0 - pad), x_of(hi - 1.0 + pad));
            let y1 = brace_top + brace_drop;
            items.push(Item::Polyline {
                points: vec![(x0, brace_top), (x0, y1), (x1, y1), (x1, brace_top)],
                role: Role::Brace,
            });
            items.push(Item::Line {
                from: (centre, y1),
                to: (centre, y1 + brace_drop),
                role: Role::Brace,
            });
        }
        // Odd and even gaps alternate rows so short neighbours do not collide.
        let depth = if j % 2 == 0 { 2.25 } else { 2.65 };
        items.push(Item::Text {
            at: (centre, row(depth)),
            text: format!("g{}={}", j + 1, gap),
            size: font,
            role: Role::Label,
        });
    }
    Ok(())
}

/// Four fractional digits, never scientific notation, no negative zero.
pub fn fmt_num(v: f64) -> String {
    let s = format!("{v:.4}");
    if s == "-0.0000" {
        "0.0000".to_string()
    } else {
        s
    }
}

pub fn emit(scene: &Scene, format: Format) -> String {
    match format {
        Format::Svg => emit_svg(scene),
        Format::Tikz => emit_tikz(scene),
    }
}

/// Lays out and serializes in one step.
pub fn render(spec: &FigureSpec) -> Result<String> {
    Ok(emit(&layout(spec)?, spec.format))
}

fn xml_escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

fn svg_paint(style: &Style, scale: f64) -> String {
    let mut out = format!("fill=\"{}\"", style.fill.unwrap_or("none"));
    if let Some(stroke) = style.stroke {
        let width = style.width * scale;
        let _ = write!(
            out,
            " stroke=\"{stroke}\" stroke-width=\"{}\"",
            fmt_num(width)
        );
        if style.dashed {
            let _ = write!(
                out,
                " stroke-dasharray=\"{} {}\"",
                fmt_num(4.0 * width),
                fmt_num(3.0 * width)
            );
        }
        out.push_str(" stroke-linejoin=\"round\"");
    }
    out
}

fn svg_points(points: &[(f64, f64)]) -> String {
    points
        .iter()
        .map(|(x, y)| format!("{},{}", fmt_num(*x), fmt_num(*y)))
        .collect::<Vec<_>>()
        .join(" ")
}

fn emit_svg(scene: &Scene) -> String {
    let (x, y, w, h) = scene.view_box();
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"{} {} {} {}\">",
        fmt_num(w),
        fmt_num(h),
        fmt_num(x),
        fmt_num(y),
        fmt_num(w),
        fmt_num(h)
    );
    for item in &scene.items {
        let line = match item {
            Item::Line { from, to, role } => format!(
                "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" {}/>",
                fmt_num(from.0),
                fmt_num(from.1),
                fmt_num(to.0),
                fmt_num(to.1),
                svg_paint(&style(*role), scene.scale)
            ),
            Item::Dot { at, radius, role } => format!(
                "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" {}/>",
                fmt_num(at.0),
                fmt_num(at.1),
                fmt_num(*radius),
                svg_paint(&style(*role), scene.scale)
            ),
            Item::Polygon { points, role } => format!(
                "<polygon points=\"{}\" {}/>",
                svg_points(points),
                svg_paint(&style(*role), scene.scale)
            ),
            Item::Polyline { points, role } => format!(
                "<polyline points=\"{}\" {}/>",
                svg_points(points),
                svg_paint(&style(*role), scene.scale)
            ),
            Item::Text { at, text, size, role } => format!(
                "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"{}\" text-anchor=\"middle\" {}>{}</text>",
                fmt_num(at.0),
                fmt_num(at.1),
                fmt_num(*size),
                svg_paint(&style(*role), scene.scale),
                xml_escape(text)
            ),
        };
        let _ = writeln!(out, "  {line}");
    }
    out.push_str("</svg>\n");
    out
}

fn tikz_color(hex: &str) -> &'static str {
    PALETTE
        .iter()
        .find(|(h, _)| *h == hex)
        .map(|(_, name)| *name)
        .expect("style colors come from the palette")
}

fn tikz_options(style: &Style) -> String {
    let mut opts = Vec::new();
    if let Some(stroke) = style.stroke {
        opts.push(format!("draw={}", tikz_color(stroke)));
        opts.push(format!("line width={}pt", fmt_num(style.width * 20.0)));
        if style.dashed {
            opts.push("dashed".to_string());
        }
        opts.push("line join=round".to_string());
    }
    if let Some(fill) = style.fill {
        opts.push(format!("fill={}", tikz_color(fill)));
    }
    opts.join(", ")
}

/// TikZ coordinates are lattice units with y pointing up.
fn emit_tikz(scene: &Scene) -> String {
    let scale = if scene.scale > 0.0 { scene.scale } else { 1.0 };
    let pt = |p: &(f64, f64)| format!("({},{})", fmt_num(p.0 / scale), fmt_num(-p.1 / scale));
    let mut out = String::new();
    out.push_str("\\begin{tikzpicture}[x=1cm, y=1cm]\n");
    for (hex, name) in PALETTE {
        let _ = writeln!(
            out,
            "  \\definecolor{{{name}}}{{HTML}}{{{}}}",
            hex[1..].to_uppercase()
        );
    }
    for item in &scene.items {
        let line = match item {
            Item::Line { from, to, role } => {
                format!(
                    "\\draw[{}] {} -- {};",
                    tikz_options(&style(*role)),
                    pt(from),
                    pt(to)
                )
            }
            Item::Dot { at, radius, role } => format!(
                "\\path[{}] {} circle[radius={}];",
                tikz_options(&style(*role)),
                pt(at),
                fmt_num(radius / scale)
            ),
            Item::Polygon { points, role } => format!(
                "\\path[{}] {} -- cycle;",
                tikz_options(&style(*role)),
                points.iter().map(pt).collect::<Vec<_>>().join(" -- ")
            ),
            Item::Polyline { points, role } => format!(
                "\\path[{}] {};",
                tikz_options(&style(*role)),
                points.iter().map(pt).collect::<Vec<_>>().join(" -- ")
            ),
            Item::Text { at, text, role, .. } => format!(
                "\\node[text={}, font=\\scriptsize] at {} {{${}$}};",
                tikz_color(style(*role).fill.unwrap_or(INK)),
                pt(at),
                tikz_label(text)
            ),
        };
        let _ = writeln!(out, "  {line}");
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}

/// `g3=2` becomes `g_{3}=2`; plain numbers pass through.
fn tikz_label(text: &str) -> String {
    match text.strip_prefix('g').and_then(|rest| rest.split_once('=')) {
        Some((index, value)) => format!("g_{{{index}}}={value}"),
        None => text.to_string(),
    }
}
