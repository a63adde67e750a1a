use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use polychora::builder::{build_tesseract, normalize_unit_edge, Polytope, PolytopeKind};
use polychora::complexes::IncidenceComplex;
use polychora::locator::{solve_vertex, SphereSystem};
use polychora::metrics::{polytope_stats, StatsReport};
use polychora::paperdata::{self, ValidationReport};
use polychora::projector::{emit_csv, emit_svg, project_polytope, SvgOptions};
use polychora::symmetry::{pole_identity, symmetry_profile};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FINDINGS: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "polychora", version, about = "Regular 4-polytopes: construction, measurement, projection")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write the vertex coordinates of a polytope as CSV.
    Generate {
        name: PolytopeKind,
        /// Rescale to edge length 1.
        #[arg(long)]
        unit_edge: bool,
        /// Print exact golden-field values instead of decimals.
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Counts, incidence constants, angles and measures at unit edge.
    Stats {
        name: PolytopeKind,
        #[arg(long)]
        json: bool,
    },
    /// Project onto the plane and draw the wireframe.
    Project(ProjectArgs),
    /// Find the points at distances (a, a, a, b) from four centers.
    Solve {
        /// CSV with four rows `x1,x2,x3,x4`, optionally prefixed by an index column.
        #[arg(long)]
        centers: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        a: f64,
        #[arg(long, allow_negative_numbers = true)]
        b: f64,
    },
    /// Group order, orbits, stabilizers and the pole-number identity.
    Pole { name: PolytopeKind },
    /// Check published coordinate and joint tables against ground truth.
    Validate {
        /// Coordinate CSV; defaults to the bundled table.
        #[arg(long)]
        vertices: Option<PathBuf>,
        /// Joint CSV; defaults to the bundled table.
        #[arg(long)]
        joints: Option<PathBuf>,
        #[arg(long)]
        canonical: PolytopeKind,
        /// Write the full report as JSON.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Exit with status 2 when there are findings.
        #[arg(long)]
        strict: bool,
    },
    /// Export ground-truth data in the table formats.
    Export {
        what: ExportKind,
        name: PolytopeKind,
        #[arg(long)]
        unit_edge: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct ProjectArgs {
    name: PolytopeKind,
    #[arg(long, value_enum, default_value_t = Format::Svg)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 800.0)]
    width: f64,
    #[arg(long, default_value_t = 800.0)]
    height: f64,
    #[arg(long, default_value = "black")]
    stroke: String,
    /// Label vertices with their 1-based index.
    #[arg(long)]
    labels: bool,
    /// Mark vertices with dots.
    #[arg(long)]
    vertices: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Svg,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ExportKind {
    Vertices,
    Joints,
    Complex,
}

/// Parse `args` (including the program name) and run one command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_USAGE
        }
    }
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => out.write_all(text.as_bytes()).context("cannot write to stdout"),
    }
}

/// Tesseract in its 0/1 table frame, the others canonical.
fn table_frame(kind: PolytopeKind) -> Polytope {
    match kind {
        PolytopeKind::Tesseract => build_tesseract(false),
        k => k.build(),
    }
}

fn execute(cmd: Command, out: &mut dyn Write) -> anyhow::Result<i32> {
    match cmd {
        Command::Generate {
            name,
            unit_edge,
            exact,
            out: path,
        } => {
            let mut p = table_frame(name);
            if unit_edge {
                p = normalize_unit_edge(&p)?;
            }
            let text = if exact {
                let mut s = String::from("index,x1,x2,x3,x4\n");
                for (i, v) in p.vertices.iter().enumerate() {
                    let c: Vec<String> = v.coords().iter().map(|c| c.to_string()).collect();
                    s.push_str(&format!("{},{}\n", i + 1, c.join(",")));
                }
                s
            } else {
                paperdata::format_table(&p.vertices_f64())
            };
            emit(out, path.as_deref(), &text)?;
        }
        Command::Stats { name, json } => {
            let report = polytope_stats(name)?;
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
            } else {
                out.write_all(stats_table(&report).as_bytes())?;
            }
        }
        Command::Project(a) => {
            let c = IncidenceComplex::build(table_frame(a.name))?;
            let w = project_polytope(&c.polytope, &c.edges);
            let text = match a.format {
                Format::Csv => emit_csv(&w),
                Format::Svg => {
                    if !(a.width > 0.0 && a.height > 0.0) {
                        bail!("width and height must be positive");
                    }
                    emit_svg(
                        &w,
                        &SvgOptions {
                            width: a.width,
                            height: a.height,
                            stroke: a.stroke,
                            labels: a.labels,
                            vertices: a.vertices,
                            ..SvgOptions::default()
                        },
                    )
                }
            };
            emit(out, a.out.as_deref(), &text)?;
        }
        Command::Solve { centers, a, b } => {
            let text = std::fs::read_to_string(&centers).with_context(|| format!("cannot read {}", centers.display()))?;
            let c = parse_centers(&text).with_context(|| format!("in {}", centers.display()))?;
            let roots = solve_vertex(&SphereSystem::new(c, a, b)?)?;
            out.write_all(paperdata::format_table(&roots).as_bytes())?;
        }
        Command::Pole { name } => {
            let c = IncidenceComplex::build(name.build())?;
            let s = symmetry_profile(&c)?;
            let p = pole_identity(&s);
            writeln!(out, "{} {}", name, name.descriptor())?;
            writeln!(out, "{:<16}{:>8}{:>8}{:>8}", "", "vertex", "edge", "face")?;
            writeln!(out, "{:<16}{:>8}", "order n", s.n)?;
            writeln!(out, "{:<16}{:>8}", "cells", s.cell_count)?;
            for (label, row) in [("orbit v", s.v), ("stabilizer", s.n_stab), ("alpha", s.alpha)] {
                writeln!(out, "{:<16}{:>8}{:>8}{:>8}", label, row[0], row[1], row[2])?;
            }
            writeln!(out, "{:<16}{:>8}", "left", p.left)?;
            writeln!(out, "{:<16}{:>8}", "right", p.right)?;
            writeln!(out, "{}", if p.holds { "equals" } else { "differs" })?;
        }
        Command::Validate {
            vertices,
            joints,
            canonical,
            report,
            strict,
        } => {
            let records = match &vertices {
                Some(p) => paperdata::load_table(p)?,
                None => paperdata::bundled_table(canonical)?,
            };
            let joint_records = match &joints {
                Some(p) => paperdata::load_joints(p)?,
                None => paperdata::bundled_joints(canonical)?,
            };
            let r = paperdata::validate(&records, &joint_records, &canonical.build());
            let adj = paperdata::cross_check_adjacency(&records, &joint_records);
            write_validation_summary(out, &r, records.len(), &adj)?;
            if let Some(path) = report {
                let json = serde_json::to_string_pretty(&r)?;
                std::fs::write(&path, json + "\n").with_context(|| format!("cannot write {}", path.display()))?;
            }
            if strict && !r.is_clean() {
                return Ok(EXIT_FINDINGS);
            }
        }
        Command::Export {
            what,
            name,
            unit_edge,
            out: path,
        } => {
            let mut c = IncidenceComplex::build(table_frame(name))?;
            if unit_edge {
                c = c.unit_edge()?;
            }
            let text = match what {
                ExportKind::Vertices => paperdata::format_table(&c.polytope.vertices_f64()),
                ExportKind::Joints => paperdata::format_joints(&c.adjacency_lists()),
                ExportKind::Complex => serde_json::to_string_pretty(&c.to_export())? + "\n",
            };
            emit(out, path.as_deref(), &text)?;
        }
    }
    Ok(EXIT_OK)
}

fn parse_centers(text: &str) -> anyhow::Result<[[f64; 4]; 4]> {
    let mut rows = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        let parsed: Result<Vec<f64>, _> = fields.iter().map(|f| f.parse::<f64>()).collect();
        let values = match parsed {
            Ok(v) => v,
            Err(_) if rows.is_empty() && n == 0 => continue,
            Err(_) => bail!("line {}: non-numeric field", n + 1),
        };
        let coords = match values.len() {
            4 => &values[..],
            5 => &values[1..],
            k => bail!("line {}: expected 4 coordinates, found {k} fields", n + 1),
        };
        rows.push([coords[0], coords[1], coords[2], coords[3]]);
    }
    rows.try_into()
        .map_err(|r: Vec<[f64; 4]>| anyhow!("expected 4 centers, found {}", r.len()))
}

pub fn stats_table(r: &StatsReport) -> String {
    let [p, q, rr] = r.schlafli;
    let mut s = format!("{} {{{p}, {q}, {rr}}}\n", r.name);
    let row = |s: &mut String, label: &str, value: String| s.push_str(&format!("  {label:<22}{value:>18}\n"));
    s.push_str("Composition\n");
    row(&mut s, "vertices", r.counts.vertices.to_string());
    row(&mut s, "edges", r.counts.edges.to_string());
    row(&mut s, "faces", r.counts.faces.to_string());
    row(&mut s, "cells", r.counts.cells.to_string());
    s.push_str("Feature\n");
    row(&mut s, "edges per vertex", r.feature.edges_per_vertex.to_string());
    row(&mut s, "faces per edge", r.feature.faces_per_edge.to_string());
    row(&mut s, "cells per face", r.feature.cells_per_face.to_string());
    s.push_str("Numerical value (edge a = 1)\n");
    row(&mut s, "angle between edges", format!("{:.10}", r.angles_deg.edges));
    row(&mut s, "angle between faces", format!("{:.10}", r.angles_deg.faces));
    row(&mut s, "angle between cells", format!("{:.10}", r.angles_deg.cells));
    row(&mut s, "boundary content a^3", format!("{:.10}", r.boundary_content));
    row(&mut s, "hypervolume a^4", format!("{:.10}", r.hypervolume));
    row(&mut s, "inradius a", format!("{:.10}", r.inradius));
    s
}

fn write_validation_summary(
    out: &mut dyn Write,
    r: &ValidationReport,
    rows: usize,
    adj: &paperdata::AdjacencyCheck,
) -> std::io::Result<()> {
    writeln!(out, "rows                  {rows}")?;
    writeln!(out, "median radius         {:.10}", r.median_radius)?;
    writeln!(out, "modal edge length     {:.10}", r.modal_edge_length)?;
    writeln!(out, "radius outliers       {}", r.radius_outliers.len())?;
    for o in &r.radius_outliers {
        writeln!(out, "  row {} radius {:.10} ({:+.3e})", o.index, o.radius, o.deviation)?;
    }
    writeln!(out, "edge outliers         {}", r.edge_outliers.len())?;
    for o in &r.edge_outliers {
        writeln!(out, "  {}-{} length {:.10} ({:+.3e})", o.pair.0, o.pair.1, o.distance, o.deviation)?;
    }
    writeln!(out, "asymmetric joints     {}", r.asymmetric_pairs.len())?;
    for (i, j) in &r.asymmetric_pairs {
        writeln!(out, "  {i} lists {j}")?;
    }
    writeln!(out, "duplicate rows        {}", r.duplicate_rows.len())?;
    for (i, j) in &r.duplicate_rows {
        writeln!(out, "  {i} = {j}")?;
    }
    writeln!(out, "degree violations     {} (expected {})", r.degree_violations.len(), r.expected_degree)?;
    for (i, d) in &r.degree_violations {
        writeln!(out, "  row {i} degree {d}")?;
    }
    writeln!(
        out,
        "spectrum match        {:.10} ({} unmatched)",
        r.spectrum_match_fraction,
        r.spectrum_mismatches.len()
    )?;
    writeln!(
        out,
        "adjacency recomputed  {} agree, {} missing, {} extra",
        adj.agree,
        adj.missing.len(),
        adj.extra.len()
    )?;
    writeln!(out, "findings              {}", r.finding_count())
}
