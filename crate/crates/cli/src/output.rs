use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use anyhow::{Context, Result};

use crate::args::Format;

/// Buffered destination for one command's output.
pub struct Out {
    pub format: Format,
    sink: BufWriter<Box<dyn Write>>,
}

impl Out {
    pub fn open(path: Option<&Path>, format: Format) -> Result<Self> {
        let sink: Box<dyn Write> = match path {
            Some(p) => Box::new(File::create(p).with_context(|| format!("creating {}", p.display()))?),
            None => Box::new(io::stdout()),
        };
        Ok(Out { format, sink: BufWriter::new(sink) })
    }

    pub fn json(&mut self, value: &serde_json::Value) -> Result<()> {
        serde_json::to_writer_pretty(&mut self.sink, value)?;
        writeln!(self.sink)?;
        Ok(())
    }

    pub fn csv<const N: usize, R>(&mut self, header: [&str; N], rows: impl IntoIterator<Item = R>) -> Result<()>
    where
        R: AsRef<[String]>,
    {
        let mut w = csv::Writer::from_writer(&mut self.sink);
        w.write_record(header)?;
        for row in rows {
            w.write_record(row.as_ref())?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn finish(mut self) -> Result<()> {
        self.sink.flush()?;
        Ok(())
    }
}

impl Write for Out {
    fn write(&mut self, buf: &[u8]) -> io::Result<usize> {
        self.sink.write(buf)
    }

    fn flush(&mut self) -> io::Result<()> {
        self.sink.flush()
    }
}
