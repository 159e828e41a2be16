//! The default pipeline command: preprocess, similarity curve, segmentation,
//! statistics, and output rendering.

use std::fmt::Write as _;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use serde::Serialize;

use textfrag::evaluation::{fragment_lengths, length_stats, FragmentStats};
use textfrag::segmenter::{segment, PruningMode, SegmentInput, Segmentation};
use textfrag::{
    parse_stopword_list, preprocess, similarity_curve, CostFamily, CostSpec, Document,
    PreprocessConfig, SimilarityCurve, WindowConfig,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CostArg {
    Linear,
    Parabola,
    /// Both families, linear rows first
    Both,
}

impl CostArg {
    fn families(self) -> Vec<CostFamily> {
        match self {
            CostArg::Linear => vec![CostFamily::Linear],
            CostArg::Parabola => vec![CostFamily::Parabola],
            CostArg::Both => vec![CostFamily::Linear, CostFamily::Parabola],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PruningArg {
    Safe,
    Verbatim,
    Off,
}

impl From<PruningArg> for PruningMode {
    fn from(arg: PruningArg) -> Self {
        match arg {
            PruningArg::Safe => PruningMode::Safe,
            PruningArg::Verbatim => PruningMode::Verbatim,
            PruningArg::Off => PruningMode::Off,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Text,
    Json,
    Csv,
    Svg,
}

#[derive(Args, Debug)]
pub struct RunArgs {
    /// Input text file(s). Several files are treated as sections of one
    /// experiment: each is segmented on its own and the fragments are pooled
    /// in the statistics.
    #[arg(long, short = 'i', required = true, num_args = 1..)]
    pub input: Vec<PathBuf>,

    /// Stopword file, one lowercase word per line with '#' comments.
    /// Defaults to the built-in SMART list.
    #[arg(long)]
    pub stopwords: Option<PathBuf>,

    /// Most frequent terms kept per paragraph (k)
    #[arg(long, default_value_t = 50)]
    pub top_terms: usize,

    /// Window size in paragraphs on each side of a boundary (W)
    #[arg(long, default_value_t = 3)]
    pub window: usize,

    /// Fragment-length cost family
    #[arg(long, value_enum, default_value_t = CostArg::Parabola)]
    pub cost: CostArg,

    /// Preferred fragment length in words (p)
    #[arg(long, default_value_t = 600)]
    pub preferred: u32,

    /// Length-cost scaling factor (h)
    #[arg(long, default_value_t = 0.5)]
    pub scale: f64,

    /// Comma-separated h values; emits one statistics row per value
    #[arg(long, value_delimiter = ',', conflicts_with = "scale")]
    pub sweep_scale: Option<Vec<f64>>,

    /// Inner-loop pruning of the dynamic program
    #[arg(long, value_enum, default_value_t = PruningArg::Safe)]
    pub pruning: PruningArg,

    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    pub format: FormatArg,

    /// Write output to this file instead of stdout
    #[arg(long, short = 'o')]
    pub output: Option<PathBuf>,

    /// Also export the similarity curve as `boundary,similarity` CSV
    #[arg(long)]
    pub export_curve: Option<PathBuf>,

    /// Skip input files with fewer paragraphs than this (the corpus tables
    /// use 20)
    #[arg(long, default_value_t = 1)]
    pub min_paragraphs: usize,
}

/// One preprocessed input file.
struct Section {
    name: String,
    doc: Document,
    curve: SimilarityCurve,
}

/// One (family, h) pipeline outcome over every section.
struct Run {
    family: CostFamily,
    scale: f64,
    /// Segmentation per section, in input order.
    segmentations: Vec<Segmentation>,
    /// Fragment lengths pooled over sections.
    fragments: Vec<u64>,
    stats: FragmentStats,
}

#[derive(Serialize)]
struct ParamsJson {
    cost_function: String,
    preferred_length: u32,
    scale: f64,
    top_terms: usize,
    window: usize,
}

#[derive(Serialize)]
struct StatsJson {
    l_avg: f64,
    l_min: u64,
    l_max: u64,
    d_avg: f64,
    m: usize,
}

#[derive(Serialize)]
struct RunJson {
    params: ParamsJson,
    boundaries: Vec<usize>,
    fragment_lengths: Vec<u64>,
    total_cost: f64,
    stats: StatsJson,
}

pub fn run(args: &RunArgs) -> Result<()> {
    let window_cfg = WindowConfig::new(args.top_terms, args.window)
        .map_err(|e| anyhow::anyhow!("{e}"))?;
    let scales = match &args.sweep_scale {
        Some(values) if values.is_empty() => bail!("--sweep-scale needs at least one value"),
        Some(values) => values.clone(),
        None => vec![args.scale],
    };
    for &h in &scales {
        if !(h > 0.0) || !h.is_finite() {
            bail!("scale values must be finite and positive, got {h}");
        }
    }

    let preprocess_cfg = match &args.stopwords {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading stopword file {}", path.display()))?;
            PreprocessConfig::with_stopwords(parse_stopword_list(&text))
        }
        None => PreprocessConfig::smart(),
    };

    let mut sections = Vec::new();
    for path in &args.input {
        let raw = std::fs::read_to_string(path)
            .with_context(|| format!("reading input {}", path.display()))?;
        let doc = preprocess(&raw, &preprocess_cfg)
            .with_context(|| format!("preprocessing {}", path.display()))?;
        if doc.n() < args.min_paragraphs {
            eprintln!(
                "textfrag: skipping {} ({} paragraphs < {})",
                path.display(),
                doc.n(),
                args.min_paragraphs
            );
            continue;
        }
        let curve = similarity_curve(&doc, &window_cfg)
            .with_context(|| format!("computing similarity curve for {}", path.display()))?;
        let name = path
            .file_name()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| path.display().to_string());
        sections.push(Section { name, doc, curve });
    }
    if sections.is_empty() {
        bail!("no input section passed the --min-paragraphs {} filter", args.min_paragraphs);
    }

    if let Some(path) = &args.export_curve {
        if sections.len() != 1 {
            bail!("--export-curve supports a single input file");
        }
        std::fs::write(path, sections[0].curve.to_csv())
            .with_context(|| format!("writing curve CSV {}", path.display()))?;
    }

    let mut runs = Vec::new();
    for family in args.cost.families() {
        for &scale in &scales {
            runs.push(execute(&sections, family, scale, args)?);
        }
    }

    let rendered = match args.format {
        FormatArg::Text => render_text(&sections, &runs, args),
        FormatArg::Csv => render_stats_csv(&runs),
        FormatArg::Json => render_json(&sections, &runs, args)?,
        FormatArg::Svg => render_svg(&sections, &runs, args)?,
    };

    match &args.output {
        Some(path) => std::fs::write(path, rendered)
            .with_context(|| format!("writing output {}", path.display()))?,
        None => print!("{rendered}"),
    }
    Ok(())
}

fn execute(sections: &[Section], family: CostFamily, scale: f64, args: &RunArgs) -> Result<Run> {
    let spec =
        CostSpec::new(family, args.preferred, scale).map_err(|e| anyhow::anyhow!("{e}"))?;
    let mut segmentations = Vec::new();
    let mut fragments = Vec::new();
    for section in sections {
        let input = SegmentInput::new(section.doc.lengths(), section.curve.clone(), spec)
            .map_err(|e| anyhow::anyhow!("{e}"))?;
        let seg = segment(&input, args.pruning.into()).map_err(|e| anyhow::anyhow!("{e}"))?;
        fragments.extend(fragment_lengths(&seg.boundaries, &section.doc.lengths())
            .map_err(|e| anyhow::anyhow!("{e}"))?);
        segmentations.push(seg);
    }
    let stats = length_stats(&fragments, args.preferred);
    Ok(Run {
        family,
        scale,
        segmentations,
        fragments,
        stats,
    })
}

fn join<T: std::fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn render_text(sections: &[Section], runs: &[Run], args: &RunArgs) -> String {
    let mut out = String::new();
    for section in sections {
        let _ = writeln!(
            out,
            "input: {}  paragraphs: {}  words: {}",
            section.name,
            section.doc.n(),
            section.doc.total_words()
        );
    }
    if runs.len() == 1 {
        let run = &runs[0];
        let _ = writeln!(
            out,
            "cost_function: {}  preferred: {}  scale: {:.2}  top_terms: {}  window: {}",
            run.family, args.preferred, run.scale, args.top_terms, args.window
        );
        for (section, seg) in sections.iter().zip(&run.segmentations) {
            if sections.len() > 1 {
                let _ = writeln!(out, "section: {}", section.name);
            }
            let _ = writeln!(out, "boundaries: {}", join(&seg.boundaries));
            let _ = writeln!(
                out,
                "fragment_lengths: {}",
                join(fragment_lengths(&seg.boundaries, &section.doc.lengths()).expect("valid"))
            );
            let _ = writeln!(out, "total_cost: {:.6}", seg.total_cost);
        }
        let s = run.stats;
        let _ = writeln!(
            out,
            "fragments: {}  l_avg: {:.1}  l_min: {}  l_max: {}  d_avg: {:.1}",
            s.m, s.l_avg, s.l_min, s.l_max, s.d_avg
        );
    } else {
        out.push_str(&render_stats_table(runs));
    }
    out
}

fn render_stats_table(runs: &[Run]) -> String {
    let mut out = String::from(
        "cost_function      h    l_avg   l_min   l_max    d_avg\n",
    );
    for run in runs {
        let s = run.stats;
        let _ = writeln!(
            out,
            "{:<13} {:>6.2} {:>8.1} {:>7} {:>7} {:>8.1}",
            run.family.as_str(),
            run.scale,
            s.l_avg,
            s.l_min,
            s.l_max,
            s.d_avg
        );
    }
    out
}

fn render_stats_csv(runs: &[Run]) -> String {
    let mut out = String::from("cost_function,h,l_avg,l_min,l_max,d_avg\n");
    for run in runs {
        let s = run.stats;
        let _ = writeln!(
            out,
            "{},{:.2},{:.1},{},{},{:.1}",
            run.family.as_str(),
            run.scale,
            s.l_avg,
            s.l_min,
            s.l_max,
            s.d_avg
        );
    }
    out
}

fn render_json(sections: &[Section], runs: &[Run], args: &RunArgs) -> Result<String> {
    if sections.len() != 1 {
        bail!("--format json supports a single input file");
    }
    let to_json = |run: &Run| RunJson {
        params: ParamsJson {
            cost_function: run.family.as_str().to_string(),
            preferred_length: args.preferred,
            scale: run.scale,
            top_terms: args.top_terms,
            window: args.window,
        },
        boundaries: run.segmentations[0].boundaries.clone(),
        fragment_lengths: run.fragments.clone(),
        total_cost: run.segmentations[0].total_cost,
        stats: StatsJson {
            l_avg: run.stats.l_avg,
            l_min: run.stats.l_min,
            l_max: run.stats.l_max,
            d_avg: run.stats.d_avg,
            m: run.stats.m,
        },
    };
    let mut rendered = if runs.len() == 1 {
        serde_json::to_string_pretty(&to_json(&runs[0]))?
    } else {
        serde_json::to_string_pretty(&runs.iter().map(to_json).collect::<Vec<_>>())?
    };
    rendered.push('\n');
    Ok(rendered)
}

fn render_svg(sections: &[Section], runs: &[Run], args: &RunArgs) -> Result<String> {
    if sections.len() != 1 {
        bail!("--format svg supports a single input file");
    }
    if runs.len() != 1 {
        bail!("--format svg supports a single cost family and a single scale");
    }
    let section = &sections[0];
    let run = &runs[0];
    let title = format!(
        "{} p={} h={:.2} k={} W={}",
        run.family, args.preferred, run.scale, args.top_terms, args.window
    );
    Ok(crate::svg::render_curve_svg(
        section.curve.values(),
        &run.segmentations[0].boundaries,
        &section.doc.lengths(),
        &title,
    ))
}
