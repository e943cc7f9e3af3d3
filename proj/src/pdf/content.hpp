// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "docanno/layout.hpp"
#include "pdf/document.hpp"
#include "pdf/font.hpp"
#include "pdf/matrix.hpp"

namespace docanno::pdf {

/// Thresholds of the word-boundary rule, as fractions of the current font size.
inline constexpr double kMaxGlyphGap = 0.25;
inline constexpr double kMaxBaselineShift = 0.20;

/// Interprets one page's content (and nested form XObjects) and groups the
/// shown glyphs into word tokens in the page's viewing frame.
class PageInterpreter {
public:
    PageInterpreter(const Document& doc, const PageNode& page, int page_index);

    /// Runs the interpreter. Never throws for content-level damage; problems
    /// are recorded as warnings.
    std::vector<Token> run();

    const std::vector<std::string>& warnings() const { return warnings_; }
    Size view_size() const { return view_size_; }

private:
    struct TextState {
        double char_spacing = 0.0;
        double word_spacing = 0.0;
        double horizontal_scale = 1.0;
        double leading = 0.0;
        double rise = 0.0;
        double font_size = 0.0;
        std::shared_ptr<const Font> font;
    };
    struct GraphicsState {
        Matrix ctm;
        TextState text;
    };
    struct PendingToken {
        std::string text;
        Bounds box;
        Point end;
        Point direction;
        double font_size = 0.0;
        bool active = false;
    };

    void execute(const std::string& content, const Object& resources, int depth);
    void op(const std::string& name, std::vector<Object>& args, const Object& resources, int depth);
    void show_text(const std::string& bytes);
    void adjust_text(double amount);
    void run_form(const std::string& name, const Object& resources, int depth);
    std::shared_ptr<const Font> font_from(const Object& resources, const std::string& name);

    void emit_glyph(const Glyph& glyph);
    void flush();
    void warn(const std::string& what);

    const Document& doc_;
    const PageNode& page_;
    int page_index_;
    Matrix view_;  // user space -> top-left viewing frame
    Size view_size_;

    GraphicsState gs_;
    std::vector<GraphicsState> stack_;
    Matrix text_matrix_;
    Matrix line_matrix_;
    bool in_text_ = false;

    PendingToken pending_;
    std::vector<Token> tokens_;
    std::vector<std::string> warnings_;
    std::map<std::string, std::shared_ptr<const Font>> font_cache_;
    bool type3_warned_ = false;
};

}  // namespace docanno::pdf
