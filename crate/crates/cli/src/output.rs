//! Text and record output. Record mode emits line-oriented `key: value`
//! pairs grouped under `record:` headers, with a versioned format line, so
//! scripts can diff runs.

use std::fmt::Display;

pub const RECORDS_HEADER: &str = "format: hallnum-records/1";

pub struct Sink {
    records: bool,
    buf: String,
    header_written: bool,
}

impl Sink {
    pub fn new(records: bool) -> Self {
        Sink {
            records,
            buf: String::new(),
            header_written: false,
        }
    }

    fn ensure_header(&mut self) {
        if self.records && !self.header_written {
            self.buf.push_str(RECORDS_HEADER);
            self.buf.push('\n');
            self.header_written = true;
        }
    }

    /// Starts a new record group (record mode only).
    pub fn record(&mut self, name: &str) {
        if self.records {
            self.ensure_header();
            self.buf.push_str(&format!("record: {name}\n"));
        }
    }

    /// A key/value pair (record mode only; text mode relies on `line`).
    pub fn kv(&mut self, key: &str, value: impl Display) {
        if self.records {
            self.ensure_header();
            self.buf.push_str(&format!("{key}: {value}\n"));
        }
    }

    /// A human-readable line (text mode only).
    pub fn line(&mut self, text: &str) {
        if !self.records {
            self.buf.push_str(text);
            if !text.ends_with('\n') {
                self.buf.push('\n');
            }
        }
    }

    pub fn flush(&mut self) {
        print!("{}", self.buf);
        self.buf.clear();
    }

    pub fn into_string(mut self) -> String {
        self.ensure_header();
        std::mem::take(&mut self.buf)
    }
}
