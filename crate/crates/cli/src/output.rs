//! Run records: ordered key/value pairs printed as `key=value` lines or as
//! one JSON object.

use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Debug, Default)]
pub struct Record {
    fields: Map<String, Value>,
}

impl Record {
    pub fn new(command: &str) -> Self {
        let mut r = Record::default();
        r.put("command", command);
        r
    }

    pub fn put(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        let v = serde_json::to_value(value).expect("record values serialise");
        self.fields.insert(key.to_string(), v);
        self
    }

    pub fn print(&self, json: bool) {
        if json {
            println!("{}", Value::Object(self.fields.clone()));
            return;
        }
        for (k, v) in &self.fields {
            match v {
                Value::String(s) => println!("{k}={s}"),
                Value::Null => println!("{k}="),
                other => println!("{k}={other}"),
            }
        }
    }
}
