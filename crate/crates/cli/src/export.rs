//! JSON and DOT export.

use germwork_core::germs::universal_category;

use crate::document::{Document, Input, Object};
use crate::{CliError, Format};

pub fn export(input: &Input, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => Ok(Document::from_object(input.name.clone(), &input.object).to_json()),
        Format::Dot => {
            let name = input.name.clone().unwrap_or_else(|| input.source.clone());
            match &input.object {
                Object::Category(c) => Ok(c.to_dot(&name)),
                Object::Semigroup { semigroup, .. } => {
                    Ok(universal_category(&semigroup.drop_plus())?.category().to_dot(&name))
                }
                Object::Semilattice(e) => Ok(universal_category(&e.as_semigroup()?)?.category().to_dot(&name)),
                other => Err(CliError::IncompatibleKind {
                    command: "export --format dot",
                    kind: other.kind(),
                }),
            }
        }
    }
}
