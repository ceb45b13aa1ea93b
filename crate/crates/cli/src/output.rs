//! All-or-nothing output: every file of a command is staged in a temporary
//! file next to its destination and renamed into place only once all of
//! them were written.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use tempfile::NamedTempFile;

pub fn write_all(outputs: &[(&Path, &str)]) -> Result<()> {
    let mut staged = Vec::with_capacity(outputs.len());
    for (path, contents) in outputs {
        let dir = match path.parent() {
            Some(p) if !p.as_os_str().is_empty() => p,
            _ => Path::new("."),
        };
        let mut tmp = staging_file(dir)
            .with_context(|| format!("cannot create output in {}", dir.display()))?;
        tmp.write_all(contents.as_bytes())
            .and_then(|_| tmp.flush())
            .with_context(|| format!("cannot write {}", path.display()))?;
        staged.push((tmp, *path));
    }

    let mut placed: Vec<PathBuf> = Vec::new();
    for (tmp, path) in staged {
        if let Err(e) = tmp.persist(path) {
            for p in &placed {
                let _ = fs::remove_file(p);
            }
            return Err(e.error).with_context(|| format!("cannot write {}", path.display()));
        }
        placed.push(path.to_path_buf());
    }
    Ok(())
}

// NamedTempFile defaults to 0600; outputs are ordinary shareable files.
#[cfg(unix)]
fn staging_file(dir: &Path) -> std::io::Result<NamedTempFile> {
    use std::os::unix::fs::PermissionsExt;
    tempfile::Builder::new()
        .permissions(fs::Permissions::from_mode(0o644))
        .tempfile_in(dir)
}

#[cfg(not(unix))]
fn staging_file(dir: &Path) -> std::io::Result<NamedTempFile> {
    NamedTempFile::new_in(dir)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn writes_every_file() {
        let dir = tempfile::tempdir().unwrap();
        let a = dir.path().join("a.csv");
        let b = dir.path().join("b.svg");
        write_all(&[(&a, "x\n"), (&b, "<svg/>")]).unwrap();
        assert_eq!(fs::read_to_string(&a).unwrap(), "x\n");
        assert_eq!(fs::read_to_string(&b).unwrap(), "<svg/>");
    }

    #[test]
    fn failure_leaves_nothing_behind() {
        let dir = tempfile::tempdir().unwrap();
        let a = dir.path().join("a.csv");
        let bad = dir.path().join("missing").join("b.svg");
        assert!(write_all(&[(&a, "x\n"), (&bad, "<svg/>")]).is_err());
        assert!(!a.exists());
        assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 0);
    }
}
