#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "planar/lattice.hpp"
#include "planar/openbook.hpp"
#include "planar/record.hpp"

namespace planar {

// Line-oriented text formats. Tokens are whitespace separated, '#' starts
// a comment, CRLF line endings are accepted.
//
//   open book:  page <h>
//               twist <+|-> <hole> <hole> ...
//   surgery:    comp <tb> <rot> <+1|-1>
//               lk <i> <j> <value>              (1-based, i ≠ j)
//   form:       <n>
//               <n rows of n integers>
//               boundary <k>                     (optional, default 1)
//               homology-sphere <true|false>     (optional, default false)

OpenBook parse_openbook(std::string_view text);
ContactSurgeryRecord parse_surgery(std::string_view text);
IntersectionForm parse_form(std::string_view text);

std::string print_openbook(const OpenBook& ob);
std::string print_surgery(const ContactSurgeryRecord& r);
std::string print_form(const IntersectionForm& f);

enum class DocumentKind { OpenBook, Surgery, Form };

struct Document {
    std::variant<OpenBook, ContactSurgeryRecord, IntersectionForm> payload;

    DocumentKind kind() const { return static_cast<DocumentKind>(payload.index()); }
    friend bool operator==(const Document&, const Document&) = default;
};

/// Detects the kind from the first keyword: "page" → open book, an integer
/// → form, anything else (including empty input) → surgery.
Document parse_document(std::string_view text);
std::string print_document(const Document& d);

}  // namespace planar
