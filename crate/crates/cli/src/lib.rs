//! Building blocks of the `rim` command-line tool: scenario files, CSV and
//! SVG rendering, and all-or-nothing output writing.

pub mod commands;
pub mod format;
pub mod output;
pub mod scenario_file;
pub mod svg;

pub use scenario_file::ScenarioFile;
