use anyhow::{anyhow, Result};
use plotters::prelude::*;

use deformed_hurwitz::roots::{largeg_limits, largeg_root_table, LargeGRow};
use deformed_hurwitz::scalar::rational_to_f64;
use deformed_hurwitz::symgroup::Partition;

use crate::commands::{parse_genus_list, parse_parts, Outcome, Usage, MAX_DIGITS, MAX_GENUS, MAX_ROOT_WEIGHT};
use crate::{Cli, Format, PlotArgs};

const SIZE: (u32, u32) = (800, 500);

fn palette(i: usize, n: usize) -> RGBColor {
    // hue sweep from blue to red
    let f = if n <= 1 { 0.0 } else { i as f64 / (n - 1) as f64 };
    RGBColor((40.0 + 200.0 * f) as u8, 60, (230.0 - 190.0 * f) as u8)
}

pub fn render(mu: &[usize], gs: &[u32], rows: &[LargeGRow]) -> Result<String> {
    let pts: Vec<(usize, f64, f64)> = rows
        .iter()
        .enumerate()
        .flat_map(|(i, r)| r.roots.iter().filter_map(move |s| s.parse::<f64>().ok().map(|x| (i, x, r.g as f64))))
        .collect();
    let d = mu.iter().sum::<usize>();
    let limits: Vec<f64> = largeg_limits(d).iter().map(rational_to_f64).collect();
    let lo = pts.iter().map(|p| p.1).chain(limits.iter().copied()).fold(f64::INFINITY, f64::min);
    let (xmin, xmax) = if lo.is_finite() { (lo.floor() - 0.5, 0.5) } else { (-1.0, 0.5) };
    let (gmin, gmax) = (gs[0] as f64 - 0.5, *gs.last().unwrap() as f64 + 0.5);
    let labels: Vec<String> = mu.iter().map(|m| m.to_string()).collect();
    let mut svg = String::new();
    {
        let root = SVGBackend::with_string(&mut svg, SIZE).into_drawing_area();
        root.fill(&WHITE).map_err(|e| anyhow!("{e}"))?;
        let mut chart = ChartBuilder::on(&root)
            .caption(format!("roots of H_g({})", labels.join(",")), ("sans-serif", 20))
            .margin(15)
            .x_label_area_size(35)
            .y_label_area_size(40)
            .build_cartesian_2d(xmin..xmax, gmin..gmax)
            .map_err(|e| anyhow!("{e}"))?;
        chart.configure_mesh().x_desc("t").y_desc("g").draw().map_err(|e| anyhow!("{e}"))?;
        if !pts.is_empty() {
            for &x in &limits {
                chart
                    .draw_series(LineSeries::new([(x, gmin), (x, gmax)], BLACK.mix(0.25)))
                    .map_err(|e| anyhow!("{e}"))?;
            }
        }
        for (i, r) in rows.iter().enumerate() {
            let c = palette(i, rows.len());
            chart
                .draw_series(pts.iter().filter(|p| p.0 == i).map(|p| Circle::new((p.1, p.2), 3, c.filled())))
                .map_err(|e| anyhow!("{e}"))?
                .label(format!("g={}", r.g));
        }
        root.present().map_err(|e| anyhow!("{e}"))?;
    }
    svg.push('\n');
    Ok(svg)
}

pub fn plot(cli: &Cli, a: &PlotArgs) -> Result<Outcome> {
    if cli.format.is_some_and(|f| f != Format::Svg) {
        return Err(Usage("plot writes svg only".into()).into());
    }
    let mu = Partition::new(parse_parts(&a.parts)?)?;
    let gs = parse_genus_list(&a.genus)?;
    if gs.is_empty() {
        return Err(Usage("empty genus range".into()).into());
    }
    if gs.iter().any(|&g| g > MAX_GENUS) || mu.weight() > MAX_ROOT_WEIGHT || a.digits > MAX_DIGITS {
        return Err(Usage(format!("bounds are genus <= {MAX_GENUS}, |mu| <= {MAX_ROOT_WEIGHT}, digits <= {MAX_DIGITS}")).into());
    }
    let rows = if a.digits == 0 { Vec::new() } else { largeg_root_table(&gs, &mu, a.digits)? };
    Ok(Outcome { artifact: render(mu.parts(), &gs, &rows)?, problems: Vec::new() })
}
