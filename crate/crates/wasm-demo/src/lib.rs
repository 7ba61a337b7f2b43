//! Browser bindings for the static demo page in `www/`.
//!
//! Each exported function has a plain Rust twin returning `Result<_, String>`
//! so the logic runs under `cargo test` on the host.

use wasm_bindgen::prelude::*;

use trigrid::bijection::{decode, rank, unrank};
use trigrid::cli::{parse_subset, parse_triangle, Record};
use trigrid::counting::count_closed_form;
use trigrid::render::{render, FigureSpec, Format};
use trigrid::GridSpec;

/// Largest grid the page offers; keeps the figure readable.
pub const MAX_DEMO_N: u64 = 40;

fn grid(n: u32) -> Result<GridSpec, String> {
    if n as u64 > MAX_DEMO_N {
        return Err(format!("the demo draws grids up to n = {MAX_DEMO_N}"));
    }
    GridSpec::new(n as u64).map_err(|e| e.to_string())
}

pub fn figure(n: u32, subset: &str, circumscribed: bool, gaps: bool) -> Result<String, String> {
    let g = grid(n)?;
    let mut spec = FigureSpec::new(g);
    if !subset.trim().is_empty() {
        spec.subset = Some(parse_subset(subset, &g)?);
    }
    spec.show_circumscribed = circumscribed;
    spec.show_gap_strip = gaps;
    spec.format = Format::Svg;
    render(&spec).map_err(|e| e.to_string())
}

pub fn record(n: u32, subset: &str) -> Result<String, String> {
    let g = grid(n)?;
    let subset = parse_subset(subset, &g)?;
    Record::from_subset(subset, &g)
        .map(|r| r.to_json())
        .map_err(|e| e.to_string())
}

pub fn subset_at(n: u32, index: &str) -> Result<String, String> {
    let g = grid(n)?;
    let index: u128 = index
        .trim()
        .parse()
        .map_err(|_| format!("bad rank {index:?}"))?;
    let [a, b, c, d] = unrank(index, &g).map_err(|e| e.to_string())?.elements();
    Ok(format!("{a},{b},{c},{d}"))
}

pub fn rank_of(n: u32, subset: &str) -> Result<String, String> {
    let g = grid(n)?;
    let subset = parse_subset(subset, &g)?;
    rank(subset, &g)
        .map(|k| k.to_string())
        .map_err(|e| e.to_string())
}

pub fn subset_of(n: u32, triangle: &str) -> Result<String, String> {
    let g = grid(n)?;
    let triangle = parse_triangle(triangle, &g)?;
    let [a, b, c, d] = decode(&triangle, &g).map_err(|e| e.to_string())?.elements();
    Ok(format!("{a},{b},{c},{d}"))
}

pub fn count(n: u32) -> Result<String, String> {
    let g = grid(n)?;
    count_closed_form(&g)
        .map(|c| c.to_string())
        .map_err(|e| e.to_string())
}

fn js<T>(r: Result<T, String>) -> Result<T, JsError> {
    r.map_err(|e| JsError::new(&e))
}

/// SVG of the grid, optionally with the triangle of `subset` ("a,b,c,d").
#[wasm_bindgen(js_name = renderFigure)]
pub fn render_figure(
    n: u32,
    subset: &str,
    circumscribed: bool,
    gaps: bool,
) -> Result<String, JsError> {
    js(figure(n, subset, circumscribed, gaps))
}

/// JSON record: rank, subset, vertices and circumscriber parameters.
#[wasm_bindgen(js_name = encodeSubset)]
pub fn encode_subset(n: u32, subset: &str) -> Result<String, JsError> {
    js(record(n, subset))
}

#[wasm_bindgen(js_name = decodeTriangle)]
pub fn decode_triangle(n: u32, triangle: &str) -> Result<String, JsError> {
    js(subset_of(n, triangle))
}

/// Ranks travel as decimal strings; they can exceed 2^53.
#[wasm_bindgen(js_name = unrankSubset)]
pub fn unrank_subset(n: u32, index: &str) -> Result<String, JsError> {
    js(subset_at(n, index))
}

#[wasm_bindgen(js_name = rankSubset)]
pub fn rank_subset(n: u32, subset: &str) -> Result<String, JsError> {
    js(rank_of(n, subset))
}

#[wasm_bindgen(js_name = triangleCount)]
pub fn triangle_count(n: u32) -> Result<String, JsError> {
    js(count(n))
}
