// SPDX-License-Identifier: Apache-2.0
// Generated by tools/gen_standard_fonts.py. Do not edit.

#include "pdf/standard_fonts_data.hpp"

namespace docanno::pdf::data {

const EncodingEntry kStandard[256] = {
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {"space", 0x0020},
    {"exclam", 0x0021},
    {"quotedbl", 0x0022},
    {"numbersign", 0x0023},
    {"dollar", 0x0024},
    {"percent", 0x0025},
    {"ampersand", 0x0026},
    {"quoteright", 0x2019},
    {"parenleft", 0x0028},
    {"parenright", 0x0029},
    {"asterisk", 0x002A},
    {"plus", 0x002B},
    {"comma", 0x002C},
    {"hyphen", 0x002D},
    {"period", 0x002E},
    {"slash", 0x002F},
    {"zero", 0x0030},
    {"one", 0x0031},
    {"two", 0x0032},
    {"three", 0x0033},
    {"four", 0x0034},
    {"five", 0x0035},
    {"six", 0x0036},
    {"seven", 0x0037},
    {"eight", 0x0038},
    {"nine", 0x0039},
    {"colon", 0x003A},
    {"semicolon", 0x003B},
    {"less", 0x003C},
    {"equal", 0x003D},
    {"greater", 0x003E},
    {"question", 0x003F},
    {"at", 0x0040},
    {"A", 0x0041},
    {"B", 0x0042},
    {"C", 0x0043},
    {"D", 0x0044},
    {"E", 0x0045},
    {"F", 0x0046},
    {"G", 0x0047},
    {"H", 0x0048},
    {"I", 0x0049},
    {"J", 0x004A},
    {"K", 0x004B},
    {"L", 0x004C},
    {"M", 0x004D},
    {"N", 0x004E},
    {"O", 0x004F},
    {"P", 0x0050},
    {"Q", 0x0051},
    {"R", 0x0052},
    {"S", 0x0053},
    {"T", 0x0054},
    {"U", 0x0055},
    {"V", 0x0056},
    {"W", 0x0057},
    {"X", 0x0058},
    {"Y", 0x0059},
    {"Z", 0x005A},
    {"bracketleft", 0x005B},
    {"backslash", 0x005C},
    {"bracketright", 0x005D},
    {"asciicircum", 0x005E},
    {"underscore", 0x005F},
    {"quoteleft", 0x2018},
    {"a", 0x0061},
    {"b", 0x0062},
    {"c", 0x0063},
    {"d", 0x0064},
    {"e", 0x0065},
    {"f", 0x0066},
    {"g", 0x0067},
    {"h", 0x0068},
    {"i", 0x0069},
    {"j", 0x006A},
    {"k", 0x006B},
    {"l", 0x006C},
    {"m", 0x006D},
    {"n", 0x006E},
    {"o", 0x006F},
    {"p", 0x0070},
    {"q", 0x0071},
    {"r", 0x0072},
    {"s", 0x0073},
    {"t", 0x0074},
    {"u", 0x0075},
    {"v", 0x0076},
    {"w", 0x0077},
    {"x", 0x0078},
    {"y", 0x0079},
    {"z", 0x007A},
    {"braceleft", 0x007B},
    {"bar", 0x007C},
    {"braceright", 0x007D},
    {"asciitilde", 0x007E},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {"exclamdown", 0x00A1},
    {"cent", 0x00A2},
    {"sterling", 0x00A3},
    {"fraction", 0x2044},
    {"yen", 0x00A5},
    {"florin", 0x0192},
    {"section", 0x00A7},
    {"currency", 0x00A4},
    {"quotesingle", 0x0027},
    {"quotedblleft", 0x201C},
    {"guillemotleft", 0x00AB},
    {"guilsinglleft", 0x2039},
    {"guilsinglright", 0x203A},
    {"fi", 0xFB01},
    {"fl", 0xFB02},
    {nullptr, 0},
    {"endash", 0x2013},
    {"dagger", 0x2020},
    {"daggerdbl", 0x2021},
    {"periodcentered", 0x00B7},
    {nullptr, 0},
    {"paragraph", 0x00B6},
    {"bullet", 0x007F},
    {"quotesinglbase", 0x201A},
    {"quotedblbase", 0x201E},
    {"quotedblright", 0x201D},
    {"guillemotright", 0x00BB},
    {"ellipsis", 0x2026},
    {"perthousand", 0x2030},
    {nullptr, 0},
    {"questiondown", 0x00BF},
    {nullptr, 0},
    {"grave", 0x0060},
    {"acute", 0x00B4},
    {"circumflex", 0x02C6},
    {"tilde", 0x02DC},
    {"macron", 0x00AF},
    {"breve", 0x02D8},
    {"dotaccent", 0x02D9},
    {"dieresis", 0x00A8},
    {nullptr, 0},
    {"ring", 0x02DA},
    {"cedilla", 0x00B8},
    {nullptr, 0},
    {"hungarumlaut", 0x02DD},
    {"ogonek", 0x02DB},
    {"caron", 0x02C7},
    {"emdash", 0x2014},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {"AE", 0x00C6},
    {nullptr, 0},
    {"ordfeminine", 0x00AA},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {"Lslash", 0x0141},
    {"Oslash", 0x00D8},
    {"OE", 0x0152},
    {"ordmasculine", 0x00BA},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {"ae", 0x00E6},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {"dotlessi", 0x0131},
    {nullptr, 0},
    {nullptr, 0},
    {"lslash", 0x0142},
    {"oslash", 0x00F8},
    {"oe", 0x0153},
    {"germandbls", 0x00DF},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
};

const EncodingEntry kWinAnsi[256] = {
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {"space", 0x0020},
    {"exclam", 0x0021},
    {"quotedbl", 0x0022},
    {"numbersign", 0x0023},
    {"dollar", 0x0024},
    {"percent", 0x0025},
    {"ampersand", 0x0026},
    {"quotesingle", 0x0027},
    {"parenleft", 0x0028},
    {"parenright", 0x0029},
    {"asterisk", 0x002A},
    {"plus", 0x002B},
    {"comma", 0x002C},
    {"hyphen", 0x002D},
    {"period", 0x002E},
    {"slash", 0x002F},
    {"zero", 0x0030},
    {"one", 0x0031},
    {"two", 0x0032},
    {"three", 0x0033},
    {"four", 0x0034},
    {"five", 0x0035},
    {"six", 0x0036},
    {"seven", 0x0037},
    {"eight", 0x0038},
    {"nine", 0x0039},
    {"colon", 0x003A},
    {"semicolon", 0x003B},
    {"less", 0x003C},
    {"equal", 0x003D},
    {"greater", 0x003E},
    {"question", 0x003F},
    {"at", 0x0040},
    {"A", 0x0041},
    {"B", 0x0042},
    {"C", 0x0043},
    {"D", 0x0044},
    {"E", 0x0045},
    {"F", 0x0046},
    {"G", 0x0047},
    {"H", 0x0048},
    {"I", 0x0049},
    {"J", 0x004A},
    {"K", 0x004B},
    {"L", 0x004C},
    {"M", 0x004D},
    {"N", 0x004E},
    {"O", 0x004F},
    {"P", 0x0050},
    {"Q", 0x0051},
    {"R", 0x0052},
    {"S", 0x0053},
    {"T", 0x0054},
    {"U", 0x0055},
    {"V", 0x0056},
    {"W", 0x0057},
    {"X", 0x0058},
    {"Y", 0x0059},
    {"Z", 0x005A},
    {"bracketleft", 0x005B},
    {"backslash", 0x005C},
    {"bracketright", 0x005D},
    {"asciicircum", 0x005E},
    {"underscore", 0x005F},
    {"grave", 0x0060},
    {"a", 0x0061},
    {"b", 0x0062},
    {"c", 0x0063},
    {"d", 0x0064},
    {"e", 0x0065},
    {"f", 0x0066},
    {"g", 0x0067},
    {"h", 0x0068},
    {"i", 0x0069},
    {"j", 0x006A},
    {"k", 0x006B},
    {"l", 0x006C},
    {"m", 0x006D},
    {"n", 0x006E},
    {"o", 0x006F},
    {"p", 0x0070},
    {"q", 0x0071},
    {"r", 0x0072},
    {"s", 0x0073},
    {"t", 0x0074},
    {"u", 0x0075},
    {"v", 0x0076},
    {"w", 0x0077},
    {"x", 0x0078},
    {"y", 0x0079},
    {"z", 0x007A},
    {"braceleft", 0x007B},
    {"bar", 0x007C},
    {"braceright", 0x007D},
    {"asciitilde", 0x007E},
    {"bullet", 0x007F},
    {"Euro", 0x20AC},
    {"bullet", 0x007F},
    {"quotesinglbase", 0x201A},
    {"florin", 0x0192},
    {"quotedblbase", 0x201E},
    {"ellipsis", 0x2026},
    {"dagger", 0x2020},
    {"daggerdbl", 0x2021},
    {"circumflex", 0x02C6},
    {"perthousand", 0x2030},
    {"Scaron", 0x0160},
    {"guilsinglleft", 0x2039},
    {"OE", 0x0152},
    {"bullet", 0x007F},
    {"Zcaron", 0x017D},
    {"bullet", 0x007F},
    {"bullet", 0x007F},
    {"quoteleft", 0x2018},
    {"quoteright", 0x2019},
    {"quotedblleft", 0x201C},
    {"quotedblright", 0x201D},
    {"bullet", 0x007F},
    {"endash", 0x2013},
    {"emdash", 0x2014},
    {"tilde", 0x02DC},
    {"trademark", 0x2122},
    {"scaron", 0x0161},
    {"guilsinglright", 0x203A},
    {"oe", 0x0153},
    {"bullet", 0x007F},
    {"zcaron", 0x017E},
    {"Ydieresis", 0x0178},
    {"space", 0x0020},
    {"exclamdown", 0x00A1},
    {"cent", 0x00A2},
    {"sterling", 0x00A3},
    {"currency", 0x00A4},
    {"yen", 0x00A5},
    {"brokenbar", 0x00A6},
    {"section", 0x00A7},
    {"dieresis", 0x00A8},
    {"copyright", 0x00A9},
    {"ordfeminine", 0x00AA},
    {"guillemotleft", 0x00AB},
    {"logicalnot", 0x00AC},
    {"hyphen", 0x002D},
    {"registered", 0x00AE},
    {"macron", 0x00AF},
    {"degree", 0x00B0},
    {"plusminus", 0x00B1},
    {"twosuperior", 0x00B2},
    {"threesuperior", 0x00B3},
    {"acute", 0x00B4},
    {"mu", 0x00B5},
    {"paragraph", 0x00B6},
    {"periodcentered", 0x00B7},
    {"cedilla", 0x00B8},
    {"onesuperior", 0x00B9},
    {"ordmasculine", 0x00BA},
    {"guillemotright", 0x00BB},
    {"onequarter", 0x00BC},
    {"onehalf", 0x00BD},
    {"threequarters", 0x00BE},
    {"questiondown", 0x00BF},
    {"Agrave", 0x00C0},
    {"Aacute", 0x00C1},
    {"Acircumflex", 0x00C2},
    {"Atilde", 0x00C3},
    {"Adieresis", 0x00C4},
    {"Aring", 0x00C5},
    {"AE", 0x00C6},
    {"Ccedilla", 0x00C7},
    {"Egrave", 0x00C8},
    {"Eacute", 0x00C9},
    {"Ecircumflex", 0x00CA},
    {"Edieresis", 0x00CB},
    {"Igrave", 0x00CC},
    {"Iacute", 0x00CD},
    {"Icircumflex", 0x00CE},
    {"Idieresis", 0x00CF},
    {"Eth", 0x00D0},
    {"Ntilde", 0x00D1},
    {"Ograve", 0x00D2},
    {"Oacute", 0x00D3},
    {"Ocircumflex", 0x00D4},
    {"Otilde", 0x00D5},
    {"Odieresis", 0x00D6},
    {"multiply", 0x00D7},
    {"Oslash", 0x00D8},
    {"Ugrave", 0x00D9},
    {"Uacute", 0x00DA},
    {"Ucircumflex", 0x00DB},
    {"Udieresis", 0x00DC},
    {"Yacute", 0x00DD},
    {"Thorn", 0x00DE},
    {"germandbls", 0x00DF},
    {"agrave", 0x00E0},
    {"aacute", 0x00E1},
    {"acircumflex", 0x00E2},
    {"atilde", 0x00E3},
    {"adieresis", 0x00E4},
    {"aring", 0x00E5},
    {"ae", 0x00E6},
    {"ccedilla", 0x00E7},
    {"egrave", 0x00E8},
    {"eacute", 0x00E9},
    {"ecircumflex", 0x00EA},
    {"edieresis", 0x00EB},
    {"igrave", 0x00EC},
    {"iacute", 0x00ED},
    {"icircumflex", 0x00EE},
    {"idieresis", 0x00EF},
    {"eth", 0x00F0},
    {"ntilde", 0x00F1},
    {"ograve", 0x00F2},
    {"oacute", 0x00F3},
    {"ocircumflex", 0x00F4},
    {"otilde", 0x00F5},
    {"odieresis", 0x00F6},
    {"divide", 0x00F7},
    {"oslash", 0x00F8},
    {"ugrave", 0x00F9},
    {"uacute", 0x00FA},
    {"ucircumflex", 0x00FB},
    {"udieresis", 0x00FC},
    {"yacute", 0x00FD},
    {"thorn", 0x00FE},
    {"ydieresis", 0x00FF},
};

const EncodingEntry kMacRoman[256] = {
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {"space", 0x0020},
    {"exclam", 0x0021},
    {"quotedbl", 0x0022},
    {"numbersign", 0x0023},
    {"dollar", 0x0024},
    {"percent", 0x0025},
    {"ampersand", 0x0026},
    {"quotesingle", 0x0027},
    {"parenleft", 0x0028},
    {"parenright", 0x0029},
    {"asterisk", 0x002A},
    {"plus", 0x002B},
    {"comma", 0x002C},
    {"hyphen", 0x002D},
    {"period", 0x002E},
    {"slash", 0x002F},
    {"zero", 0x0030},
    {"one", 0x0031},
    {"two", 0x0032},
    {"three", 0x0033},
    {"four", 0x0034},
    {"five", 0x0035},
    {"six", 0x0036},
    {"seven", 0x0037},
    {"eight", 0x0038},
    {"nine", 0x0039},
    {"colon", 0x003A},
    {"semicolon", 0x003B},
    {"less", 0x003C},
    {"equal", 0x003D},
    {"greater", 0x003E},
    {"question", 0x003F},
    {"at", 0x0040},
    {"A", 0x0041},
    {"B", 0x0042},
    {"C", 0x0043},
    {"D", 0x0044},
    {"E", 0x0045},
    {"F", 0x0046},
    {"G", 0x0047},
    {"H", 0x0048},
    {"I", 0x0049},
    {"J", 0x004A},
    {"K", 0x004B},
    {"L", 0x004C},
    {"M", 0x004D},
    {"N", 0x004E},
    {"O", 0x004F},
    {"P", 0x0050},
    {"Q", 0x0051},
    {"R", 0x0052},
    {"S", 0x0053},
    {"T", 0x0054},
    {"U", 0x0055},
    {"V", 0x0056},
    {"W", 0x0057},
    {"X", 0x0058},
    {"Y", 0x0059},
    {"Z", 0x005A},
    {"bracketleft", 0x005B},
    {"backslash", 0x005C},
    {"bracketright", 0x005D},
    {"asciicircum", 0x005E},
    {"underscore", 0x005F},
    {"grave", 0x0060},
    {"a", 0x0061},
    {"b", 0x0062},
    {"c", 0x0063},
    {"d", 0x0064},
    {"e", 0x0065},
    {"f", 0x0066},
    {"g", 0x0067},
    {"h", 0x0068},
    {"i", 0x0069},
    {"j", 0x006A},
    {"k", 0x006B},
    {"l", 0x006C},
    {"m", 0x006D},
    {"n", 0x006E},
    {"o", 0x006F},
    {"p", 0x0070},
    {"q", 0x0071},
    {"r", 0x0072},
    {"s", 0x0073},
    {"t", 0x0074},
    {"u", 0x0075},
    {"v", 0x0076},
    {"w", 0x0077},
    {"x", 0x0078},
    {"y", 0x0079},
    {"z", 0x007A},
    {"braceleft", 0x007B},
    {"bar", 0x007C},
    {"braceright", 0x007D},
    {"asciitilde", 0x007E},
    {nullptr, 0},
    {"Adieresis", 0x00C4},
    {"Aring", 0x00C5},
    {"Ccedilla", 0x00C7},
    {"Eacute", 0x00C9},
    {"Ntilde", 0x00D1},
    {"Odieresis", 0x00D6},
    {"Udieresis", 0x00DC},
    {"aacute", 0x00E1},
    {"agrave", 0x00E0},
    {"acircumflex", 0x00E2},
    {"adieresis", 0x00E4},
    {"atilde", 0x00E3},
    {"aring", 0x00E5},
    {"ccedilla", 0x00E7},
    {"eacute", 0x00E9},
    {"egrave", 0x00E8},
    {"ecircumflex", 0x00EA},
    {"edieresis", 0x00EB},
    {"iacute", 0x00ED},
    {"igrave", 0x00EC},
    {"icircumflex", 0x00EE},
    {"idieresis", 0x00EF},
    {"ntilde", 0x00F1},
    {"oacute", 0x00F3},
    {"ograve", 0x00F2},
    {"ocircumflex", 0x00F4},
    {"odieresis", 0x00F6},
    {"otilde", 0x00F5},
    {"uacute", 0x00FA},
    {"ugrave", 0x00F9},
    {"ucircumflex", 0x00FB},
    {"udieresis", 0x00FC},
    {"dagger", 0x2020},
    {"degree", 0x00B0},
    {"cent", 0x00A2},
    {"sterling", 0x00A3},
    {"section", 0x00A7},
    {"bullet", 0x007F},
    {"paragraph", 0x00B6},
    {"germandbls", 0x00DF},
    {"registered", 0x00AE},
    {"copyright", 0x00A9},
    {"trademark", 0x2122},
    {"acute", 0x00B4},
    {"dieresis", 0x00A8},
    {nullptr, 0},
    {"AE", 0x00C6},
    {"Oslash", 0x00D8},
    {nullptr, 0},
    {"plusminus", 0x00B1},
    {nullptr, 0},
    {nullptr, 0},
    {"yen", 0x00A5},
    {"mu", 0x00B5},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {"ordfeminine", 0x00AA},
    {"ordmasculine", 0x00BA},
    {nullptr, 0},
    {"ae", 0x00E6},
    {"oslash", 0x00F8},
    {"questiondown", 0x00BF},
    {"exclamdown", 0x00A1},
    {"logicalnot", 0x00AC},
    {nullptr, 0},
    {"florin", 0x0192},
    {nullptr, 0},
    {nullptr, 0},
    {"guillemotleft", 0x00AB},
    {"guillemotright", 0x00BB},
    {"ellipsis", 0x2026},
    {"space", 0x0020},
    {"Agrave", 0x00C0},
    {"Atilde", 0x00C3},
    {"Otilde", 0x00D5},
    {"OE", 0x0152},
    {"oe", 0x0153},
    {"endash", 0x2013},
    {"emdash", 0x2014},
    {"quotedblleft", 0x201C},
    {"quotedblright", 0x201D},
    {"quoteleft", 0x2018},
    {"quoteright", 0x2019},
    {"divide", 0x00F7},
    {nullptr, 0},
    {"ydieresis", 0x00FF},
    {"Ydieresis", 0x0178},
    {"fraction", 0x2044},
    {"currency", 0x00A4},
    {"guilsinglleft", 0x2039},
    {"guilsinglright", 0x203A},
    {"fi", 0xFB01},
    {"fl", 0xFB02},
    {"daggerdbl", 0x2021},
    {"periodcentered", 0x00B7},
    {"quotesinglbase", 0x201A},
    {"quotedblbase", 0x201E},
    {"perthousand", 0x2030},
    {"Acircumflex", 0x00C2},
    {"Ecircumflex", 0x00CA},
    {"Aacute", 0x00C1},
    {"Edieresis", 0x00CB},
    {"Egrave", 0x00C8},
    {"Iacute", 0x00CD},
    {"Icircumflex", 0x00CE},
    {"Idieresis", 0x00CF},
    {"Igrave", 0x00CC},
    {"Oacute", 0x00D3},
    {"Ocircumflex", 0x00D4},
    {nullptr, 0},
    {"Ograve", 0x00D2},
    {"Uacute", 0x00DA},
    {"Ucircumflex", 0x00DB},
    {"Ugrave", 0x00D9},
    {"dotlessi", 0x0131},
    {"circumflex", 0x02C6},
    {"tilde", 0x02DC},
    {"macron", 0x00AF},
    {"breve", 0x02D8},
    {"dotaccent", 0x02D9},
    {"ring", 0x02DA},
    {"cedilla", 0x00B8},
    {"hungarumlaut", 0x02DD},
    {"ogonek", 0x02DB},
    {"caron", 0x02C7},
};

const EncodingEntry kSymbol[256] = {
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {"space", 0x0020},
    {"exclam", 0x0021},
    {"universal", 0x2200},
    {"numbersign", 0x0023},
    {"existential", 0x2203},
    {"percent", 0x0025},
    {"ampersand", 0x0026},
    {"suchthat", 0x220B},
    {"parenleft", 0x0028},
    {"parenright", 0x0029},
    {"asteriskmath", 0x2217},
    {"plus", 0x002B},
    {"comma", 0x002C},
    {"minus", 0x2212},
    {"period", 0x002E},
    {"slash", 0x002F},
    {"zero", 0x0030},
    {"one", 0x0031},
    {"two", 0x0032},
    {"three", 0x0033},
    {"four", 0x0034},
    {"five", 0x0035},
    {"six", 0x0036},
    {"seven", 0x0037},
    {"eight", 0x0038},
    {"nine", 0x0039},
    {"colon", 0x003A},
    {"semicolon", 0x003B},
    {"less", 0x003C},
    {"equal", 0x003D},
    {"greater", 0x003E},
    {"question", 0x003F},
    {"congruent", 0x2245},
    {"Alpha", 0x0391},
    {"Beta", 0x0392},
    {"Chi", 0x03A7},
    {"Delta", 0x2206},
    {"Epsilon", 0x0395},
    {"Phi", 0x03A6},
    {"Gamma", 0x0393},
    {"Eta", 0x0397},
    {"Iota", 0x0399},
    {"theta1", 0x03D1},
    {"Kappa", 0x039A},
    {"Lambda", 0x039B},
    {"Mu", 0x039C},
    {"Nu", 0x039D},
    {"Omicron", 0x039F},
    {"Pi", 0x03A0},
    {"Theta", 0x0398},
    {"Rho", 0x03A1},
    {"Sigma", 0x03A3},
    {"Tau", 0x03A4},
    {"Upsilon", 0x03A5},
    {"sigma1", 0x03C2},
    {"Omega", 0x2126},
    {"Xi", 0x039E},
    {"Psi", 0x03A8},
    {"Zeta", 0x0396},
    {"bracketleft", 0x005B},
    {"therefore", 0x2234},
    {"bracketright", 0x005D},
    {"perpendicular", 0x22A5},
    {"underscore", 0x005F},
    {"radicalex", 0xF8E5},
    {"alpha", 0x03B1},
    {"beta", 0x03B2},
    {"chi", 0x03C7},
    {"delta", 0x03B4},
    {"epsilon", 0x03B5},
    {"phi", 0x03C6},
    {"gamma", 0x03B3},
    {"eta", 0x03B7},
    {"iota", 0x03B9},
    {"phi1", 0x03D5},
    {"kappa", 0x03BA},
    {"lambda", 0x03BB},
    {"mu", 0x00B5},
    {"nu", 0x03BD},
    {"omicron", 0x03BF},
    {"pi", 0x03C0},
    {"theta", 0x03B8},
    {"rho", 0x03C1},
    {"sigma", 0x03C3},
    {"tau", 0x03C4},
    {"upsilon", 0x03C5},
    {"omega1", 0x03D6},
    {"omega", 0x03C9},
    {"xi", 0x03BE},
    {"psi", 0x03C8},
    {"zeta", 0x03B6},
    {"braceleft", 0x007B},
    {"bar", 0x007C},
    {"braceright", 0x007D},
    {"similar", 0x223C},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {"Euro", 0x20AC},
    {"Upsilon1", 0x03D2},
    {"minute", 0x2032},
    {"lessequal", 0x2264},
    {"fraction", 0x2044},
    {"infinity", 0x221E},
    {"florin", 0x0192},
    {"club", 0x2663},
    {"diamond", 0x2666},
    {"heart", 0x2665},
    {"spade", 0x2660},
    {"arrowboth", 0x2194},
    {"arrowleft", 0x2190},
    {"arrowup", 0x2191},
    {"arrowright", 0x2192},
    {"arrowdown", 0x2193},
    {"degree", 0x00B0},
    {"plusminus", 0x00B1},
    {"second", 0x2033},
    {"greaterequal", 0x2265},
    {"multiply", 0x00D7},
    {"proportional", 0x221D},
    {"partialdiff", 0x2202},
    {"bullet", 0x007F},
    {"divide", 0x00F7},
    {"notequal", 0x2260},
    {"equivalence", 0x2261},
    {"approxequal", 0x2248},
    {"ellipsis", 0x2026},
    {"arrowvertex", 0xF8E6},
    {"arrowhorizex", 0xF8E7},
    {"carriagereturn", 0x21B5},
    {"aleph", 0x2135},
    {"Ifraktur", 0x2111},
    {"Rfraktur", 0x211C},
    {"weierstrass", 0x2118},
    {"circlemultiply", 0x2297},
    {"circleplus", 0x2295},
    {"emptyset", 0x2205},
    {"intersection", 0x2229},
    {"union", 0x222A},
    {"propersuperset", 0x2283},
    {"reflexsuperset", 0x2287},
    {"notsubset", 0x2284},
    {"propersubset", 0x2282},
    {"reflexsubset", 0x2286},
    {"element", 0x2208},
    {"notelement", 0x2209},
    {"angle", 0x2220},
    {"gradient", 0x2207},
    {"registerserif", 0xF6DA},
    {"copyrightserif", 0xF6D9},
    {"trademarkserif", 0xF6DB},
    {"product", 0x220F},
    {"radical", 0x221A},
    {"dotmath", 0x22C5},
    {"logicalnot", 0x00AC},
    {"logicaland", 0x2227},
    {"logicalor", 0x2228},
    {"arrowdblboth", 0x21D4},
    {"arrowdblleft", 0x21D0},
    {"arrowdblup", 0x21D1},
    {"arrowdblright", 0x21D2},
    {"arrowdbldown", 0x21D3},
    {"lozenge", 0x25CA},
    {"angleleft", 0x2329},
    {"registersans", 0xF8E8},
    {"copyrightsans", 0xF8E9},
    {"trademarksans", 0xF8EA},
    {"summation", 0x2211},
    {"parenlefttp", 0xF8EB},
    {"parenleftex", 0xF8EC},
    {"parenleftbt", 0xF8ED},
    {"bracketlefttp", 0xF8EE},
    {"bracketleftex", 0xF8EF},
    {"bracketleftbt", 0xF8F0},
    {"bracelefttp", 0xF8F1},
    {"braceleftmid", 0xF8F2},
    {"braceleftbt", 0xF8F3},
    {"braceex", 0xF8F4},
    {nullptr, 0},
    {"angleright", 0x232A},
    {"integral", 0x222B},
    {"integraltp", 0x2320},
    {"integralex", 0xF8F5},
    {"integralbt", 0x2321},
    {"parenrighttp", 0xF8F6},
    {"parenrightex", 0xF8F7},
    {"parenrightbt", 0xF8F8},
    {"bracketrighttp", 0xF8F9},
    {"bracketrightex", 0xF8FA},
    {"bracketrightbt", 0xF8FB},
    {"bracerighttp", 0xF8FC},
    {"bracerightmid", 0xF8FD},
    {"bracerightbt", 0xF8FE},
    {nullptr, 0},
};

const EncodingEntry kZapfDingbats[256] = {
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {"space", 0x0020},
    {"a1", 0x2701},
    {"a2", 0x2702},
    {"a202", 0x2703},
    {"a3", 0x2704},
    {"a4", 0x260E},
    {"a5", 0x2706},
    {"a119", 0x2707},
    {"a118", 0x2708},
    {"a117", 0x2709},
    {"a11", 0x261B},
    {"a12", 0x261E},
    {"a13", 0x270C},
    {"a14", 0x270D},
    {"a15", 0x270E},
    {"a16", 0x270F},
    {"a105", 0x2710},
    {"a17", 0x2711},
    {"a18", 0x2712},
    {"a19", 0x2713},
    {"a20", 0x2714},
    {"a21", 0x2715},
    {"a22", 0x2716},
    {"a23", 0x2717},
    {"a24", 0x2718},
    {"a25", 0x2719},
    {"a26", 0x271A},
    {"a27", 0x271B},
    {"a28", 0x271C},
    {"a6", 0x271D},
    {"a7", 0x271E},
    {"a8", 0x271F},
    {"a9", 0x2720},
    {"a10", 0x2721},
    {"a29", 0x2722},
    {"a30", 0x2723},
    {"a31", 0x2724},
    {"a32", 0x2725},
    {"a33", 0x2726},
    {"a34", 0x2727},
    {"a35", 0x2605},
    {"a36", 0x2729},
    {"a37", 0x272A},
    {"a38", 0x272B},
    {"a39", 0x272C},
    {"a40", 0x272D},
    {"a41", 0x272E},
    {"a42", 0x272F},
    {"a43", 0x2730},
    {"a44", 0x2731},
    {"a45", 0x2732},
    {"a46", 0x2733},
    {"a47", 0x2734},
    {"a48", 0x2735},
    {"a49", 0x2736},
    {"a50", 0x2737},
    {"a51", 0x2738},
    {"a52", 0x2739},
    {"a53", 0x273A},
    {"a54", 0x273B},
    {"a55", 0x273C},
    {"a56", 0x273D},
    {"a57", 0x273E},
    {"a58", 0x273F},
    {"a59", 0x2740},
    {"a60", 0x2741},
    {"a61", 0x2742},
    {"a62", 0x2743},
    {"a63", 0x2744},
    {"a64", 0x2745},
    {"a65", 0x2746},
    {"a66", 0x2747},
    {"a67", 0x2748},
    {"a68", 0x2749},
    {"a69", 0x274A},
    {"a70", 0x274B},
    {"a71", 0x25CF},
    {"a72", 0x274D},
    {"a73", 0x25A0},
    {"a74", 0x274F},
    {"a203", 0x2750},
    {"a75", 0x2751},
    {"a204", 0x2752},
    {"a76", 0x25B2},
    {"a77", 0x25BC},
    {"a78", 0x25C6},
    {"a79", 0x2756},
    {"a81", 0x25D7},
    {"a82", 0x2758},
    {"a83", 0x2759},
    {"a84", 0x275A},
    {"a97", 0x275B},
    {"a98", 0x275C},
    {"a99", 0x275D},
    {"a100", 0x275E},
    {nullptr, 0},
    {"a89", 0x2768},
    {"a90", 0x2769},
    {"a93", 0x276A},
    {"a94", 0x276B},
    {"a91", 0x276C},
    {"a92", 0x276D},
    {"a205", 0x276E},
    {"a85", 0x276F},
    {"a206", 0x2770},
    {"a86", 0x2771},
    {"a87", 0x2772},
    {"a88", 0x2773},
    {"a95", 0x2774},
    {"a96", 0x2775},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {nullptr, 0},
    {"a101", 0x2761},
    {"a102", 0x2762},
    {"a103", 0x2763},
    {"a104", 0x2764},
    {"a106", 0x2765},
    {"a107", 0x2766},
    {"a108", 0x2767},
    {"a112", 0x2663},
    {"a111", 0x2666},
    {"a110", 0x2665},
    {"a109", 0x2660},
    {"a120", 0x2460},
    {"a121", 0x2461},
    {"a122", 0x2462},
    {"a123", 0x2463},
    {"a124", 0x2464},
    {"a125", 0x2465},
    {"a126", 0x2466},
    {"a127", 0x2467},
    {"a128", 0x2468},
    {"a129", 0x2469},
    {"a130", 0x2776},
    {"a131", 0x2777},
    {"a132", 0x2778},
    {"a133", 0x2779},
    {"a134", 0x277A},
    {"a135", 0x277B},
    {"a136", 0x277C},
    {"a137", 0x277D},
    {"a138", 0x277E},
    {"a139", 0x277F},
    {"a140", 0x2780},
    {"a141", 0x2781},
    {"a142", 0x2782},
    {"a143", 0x2783},
    {"a144", 0x2784},
    {"a145", 0x2785},
    {"a146", 0x2786},
    {"a147", 0x2787},
    {"a148", 0x2788},
    {"a149", 0x2789},
    {"a150", 0x278A},
    {"a151", 0x278B},
    {"a152", 0x278C},
    {"a153", 0x278D},
    {"a154", 0x278E},
    {"a155", 0x278F},
    {"a156", 0x2790},
    {"a157", 0x2791},
    {"a158", 0x2792},
    {"a159", 0x2793},
    {"a160", 0x2794},
    {"a161", 0x2192},
    {"a163", 0x2194},
    {"a164", 0x2195},
    {"a196", 0x2798},
    {"a165", 0x2799},
    {"a192", 0x279A},
    {"a166", 0x279B},
    {"a167", 0x279C},
    {"a168", 0x279D},
    {"a169", 0x279E},
    {"a170", 0x279F},
    {"a171", 0x27A0},
    {"a172", 0x27A1},
    {"a173", 0x27A2},
    {"a162", 0x27A3},
    {"a174", 0x27A4},
    {"a175", 0x27A5},
    {"a176", 0x27A6},
    {"a177", 0x27A7},
    {"a178", 0x27A8},
    {"a179", 0x27A9},
    {"a193", 0x27AA},
    {"a180", 0x27AB},
    {"a199", 0x27AC},
    {"a181", 0x27AD},
    {"a200", 0x27AE},
    {"a182", 0x27AF},
    {nullptr, 0},
    {"a201", 0x27B1},
    {"a183", 0x27B2},
    {"a184", 0x27B3},
    {"a197", 0x27B4},
    {"a185", 0x27B5},
    {"a194", 0x27B6},
    {"a198", 0x27B7},
    {"a186", 0x27B8},
    {"a195", 0x27B9},
    {"a187", 0x27BA},
    {"a188", 0x27BB},
    {"a189", 0x27BC},
    {"a190", 0x27BD},
    {"a191", 0x27BE},
    {nullptr, 0},
};

const GlyphUnicode kGlyphUnicode[579] = {
    {"A", 0x0041},
    {"AE", 0x00C6},
    {"Aacute", 0x00C1},
    {"Acircumflex", 0x00C2},
    {"Adieresis", 0x00C4},
    {"Agrave", 0x00C0},
    {"Alpha", 0x0391},
    {"Aring", 0x00C5},
    {"Atilde", 0x00C3},
    {"B", 0x0042},
    {"Beta", 0x0392},
    {"C", 0x0043},
    {"Ccedilla", 0x00C7},
    {"Chi", 0x03A7},
    {"D", 0x0044},
    {"Delta", 0x2206},
    {"E", 0x0045},
    {"Eacute", 0x00C9},
    {"Ecircumflex", 0x00CA},
    {"Edieresis", 0x00CB},
    {"Egrave", 0x00C8},
    {"Epsilon", 0x0395},
    {"Eta", 0x0397},
    {"Eth", 0x00D0},
    {"Euro", 0x20AC},
    {"F", 0x0046},
    {"G", 0x0047},
    {"Gamma", 0x0393},
    {"H", 0x0048},
    {"I", 0x0049},
    {"Iacute", 0x00CD},
    {"Icircumflex", 0x00CE},
    {"Idieresis", 0x00CF},
    {"Ifraktur", 0x2111},
    {"Igrave", 0x00CC},
    {"Iota", 0x0399},
    {"J", 0x004A},
    {"K", 0x004B},
    {"Kappa", 0x039A},
    {"L", 0x004C},
    {"Lambda", 0x039B},
    {"Lslash", 0x0141},
    {"M", 0x004D},
    {"Mu", 0x039C},
    {"N", 0x004E},
    {"Ntilde", 0x00D1},
    {"Nu", 0x039D},
    {"O", 0x004F},
    {"OE", 0x0152},
    {"Oacute", 0x00D3},
    {"Ocircumflex", 0x00D4},
    {"Odieresis", 0x00D6},
    {"Ograve", 0x00D2},
    {"Omega", 0x2126},
    {"Omicron", 0x039F},
    {"Oslash", 0x00D8},
    {"Otilde", 0x00D5},
    {"P", 0x0050},
    {"Phi", 0x03A6},
    {"Pi", 0x03A0},
    {"Psi", 0x03A8},
    {"Q", 0x0051},
    {"R", 0x0052},
    {"Rfraktur", 0x211C},
    {"Rho", 0x03A1},
    {"S", 0x0053},
    {"Scaron", 0x0160},
    {"Sigma", 0x03A3},
    {"T", 0x0054},
    {"Tau", 0x03A4},
    {"Theta", 0x0398},
    {"Thorn", 0x00DE},
    {"U", 0x0055},
    {"Uacute", 0x00DA},
    {"Ucircumflex", 0x00DB},
    {"Udieresis", 0x00DC},
    {"Ugrave", 0x00D9},
    {"Upsilon", 0x03A5},
    {"Upsilon1", 0x03D2},
    {"V", 0x0056},
    {"W", 0x0057},
    {"X", 0x0058},
    {"Xi", 0x039E},
    {"Y", 0x0059},
    {"Yacute", 0x00DD},
    {"Ydieresis", 0x0178},
    {"Z", 0x005A},
    {"Zcaron", 0x017D},
    {"Zeta", 0x0396},
    {"a", 0x0061},
    {"a1", 0x2701},
    {"a10", 0x2721},
    {"a100", 0x275E},
    {"a101", 0x2761},
    {"a102", 0x2762},
    {"a103", 0x2763},
    {"a104", 0x2764},
    {"a105", 0x2710},
    {"a106", 0x2765},
    {"a107", 0x2766},
    {"a108", 0x2767},
    {"a109", 0x2660},
    {"a11", 0x261B},
    {"a110", 0x2665},
    {"a111", 0x2666},
    {"a112", 0x2663},
    {"a117", 0x2709},
    {"a118", 0x2708},
    {"a119", 0x2707},
    {"a12", 0x261E},
    {"a120", 0x2460},
    {"a121", 0x2461},
    {"a122", 0x2462},
    {"a123", 0x2463},
    {"a124", 0x2464},
    {"a125", 0x2465},
    {"a126", 0x2466},
    {"a127", 0x2467},
    {"a128", 0x2468},
    {"a129", 0x2469},
    {"a13", 0x270C},
    {"a130", 0x2776},
    {"a131", 0x2777},
    {"a132", 0x2778},
    {"a133", 0x2779},
    {"a134", 0x277A},
    {"a135", 0x277B},
    {"a136", 0x277C},
    {"a137", 0x277D},
    {"a138", 0x277E},
    {"a139", 0x277F},
    {"a14", 0x270D},
    {"a140", 0x2780},
    {"a141", 0x2781},
    {"a142", 0x2782},
    {"a143", 0x2783},
    {"a144", 0x2784},
    {"a145", 0x2785},
    {"a146", 0x2786},
    {"a147", 0x2787},
    {"a148", 0x2788},
    {"a149", 0x2789},
    {"a15", 0x270E},
    {"a150", 0x278A},
    {"a151", 0x278B},
    {"a152", 0x278C},
    {"a153", 0x278D},
    {"a154", 0x278E},
    {"a155", 0x278F},
    {"a156", 0x2790},
    {"a157", 0x2791},
    {"a158", 0x2792},
    {"a159", 0x2793},
    {"a16", 0x270F},
    {"a160", 0x2794},
    {"a161", 0x2192},
    {"a162", 0x27A3},
    {"a163", 0x2194},
    {"a164", 0x2195},
    {"a165", 0x2799},
    {"a166", 0x279B},
    {"a167", 0x279C},
    {"a168", 0x279D},
    {"a169", 0x279E},
    {"a17", 0x2711},
    {"a170", 0x279F},
    {"a171", 0x27A0},
    {"a172", 0x27A1},
    {"a173", 0x27A2},
    {"a174", 0x27A4},
    {"a175", 0x27A5},
    {"a176", 0x27A6},
    {"a177", 0x27A7},
    {"a178", 0x27A8},
    {"a179", 0x27A9},
    {"a18", 0x2712},
    {"a180", 0x27AB},
    {"a181", 0x27AD},
    {"a182", 0x27AF},
    {"a183", 0x27B2},
    {"a184", 0x27B3},
    {"a185", 0x27B5},
    {"a186", 0x27B8},
    {"a187", 0x27BA},
    {"a188", 0x27BB},
    {"a189", 0x27BC},
    {"a19", 0x2713},
    {"a190", 0x27BD},
    {"a191", 0x27BE},
    {"a192", 0x279A},
    {"a193", 0x27AA},
    {"a194", 0x27B6},
    {"a195", 0x27B9},
    {"a196", 0x2798},
    {"a197", 0x27B4},
    {"a198", 0x27B7},
    {"a199", 0x27AC},
    {"a2", 0x2702},
    {"a20", 0x2714},
    {"a200", 0x27AE},
    {"a201", 0x27B1},
    {"a202", 0x2703},
    {"a203", 0x2750},
    {"a204", 0x2752},
    {"a205", 0x276E},
    {"a206", 0x2770},
    {"a21", 0x2715},
    {"a22", 0x2716},
    {"a23", 0x2717},
    {"a24", 0x2718},
    {"a25", 0x2719},
    {"a26", 0x271A},
    {"a27", 0x271B},
    {"a28", 0x271C},
    {"a29", 0x2722},
    {"a3", 0x2704},
    {"a30", 0x2723},
    {"a31", 0x2724},
    {"a32", 0x2725},
    {"a33", 0x2726},
    {"a34", 0x2727},
    {"a35", 0x2605},
    {"a36", 0x2729},
    {"a37", 0x272A},
    {"a38", 0x272B},
    {"a39", 0x272C},
    {"a4", 0x260E},
    {"a40", 0x272D},
    {"a41", 0x272E},
    {"a42", 0x272F},
    {"a43", 0x2730},
    {"a44", 0x2731},
    {"a45", 0x2732},
    {"a46", 0x2733},
    {"a47", 0x2734},
    {"a48", 0x2735},
    {"a49", 0x2736},
    {"a5", 0x2706},
    {"a50", 0x2737},
    {"a51", 0x2738},
    {"a52", 0x2739},
    {"a53", 0x273A},
    {"a54", 0x273B},
    {"a55", 0x273C},
    {"a56", 0x273D},
    {"a57", 0x273E},
    {"a58", 0x273F},
    {"a59", 0x2740},
    {"a6", 0x271D},
    {"a60", 0x2741},
    {"a61", 0x2742},
    {"a62", 0x2743},
    {"a63", 0x2744},
    {"a64", 0x2745},
    {"a65", 0x2746},
    {"a66", 0x2747},
    {"a67", 0x2748},
    {"a68", 0x2749},
    {"a69", 0x274A},
    {"a7", 0x271E},
    {"a70", 0x274B},
    {"a71", 0x25CF},
    {"a72", 0x274D},
    {"a73", 0x25A0},
    {"a74", 0x274F},
    {"a75", 0x2751},
    {"a76", 0x25B2},
    {"a77", 0x25BC},
    {"a78", 0x25C6},
    {"a79", 0x2756},
    {"a8", 0x271F},
    {"a81", 0x25D7},
    {"a82", 0x2758},
    {"a83", 0x2759},
    {"a84", 0x275A},
    {"a85", 0x276F},
    {"a86", 0x2771},
    {"a87", 0x2772},
    {"a88", 0x2773},
    {"a89", 0x2768},
    {"a9", 0x2720},
    {"a90", 0x2769},
    {"a91", 0x276C},
    {"a92", 0x276D},
    {"a93", 0x276A},
    {"a94", 0x276B},
    {"a95", 0x2774},
    {"a96", 0x2775},
    {"a97", 0x275B},
    {"a98", 0x275C},
    {"a99", 0x275D},
    {"aacute", 0x00E1},
    {"acircumflex", 0x00E2},
    {"acute", 0x00B4},
    {"adieresis", 0x00E4},
    {"ae", 0x00E6},
    {"agrave", 0x00E0},
    {"aleph", 0x2135},
    {"alpha", 0x03B1},
    {"ampersand", 0x0026},
    {"angle", 0x2220},
    {"angleleft", 0x2329},
    {"angleright", 0x232A},
    {"approxequal", 0x2248},
    {"aring", 0x00E5},
    {"arrowboth", 0x2194},
    {"arrowdblboth", 0x21D4},
    {"arrowdbldown", 0x21D3},
    {"arrowdblleft", 0x21D0},
    {"arrowdblright", 0x21D2},
    {"arrowdblup", 0x21D1},
    {"arrowdown", 0x2193},
    {"arrowhorizex", 0xF8E7},
    {"arrowleft", 0x2190},
    {"arrowright", 0x2192},
    {"arrowup", 0x2191},
    {"arrowvertex", 0xF8E6},
    {"asciicircum", 0x005E},
    {"asciitilde", 0x007E},
    {"asterisk", 0x002A},
    {"asteriskmath", 0x2217},
    {"at", 0x0040},
    {"atilde", 0x00E3},
    {"b", 0x0062},
    {"backslash", 0x005C},
    {"bar", 0x007C},
    {"beta", 0x03B2},
    {"braceex", 0xF8F4},
    {"braceleft", 0x007B},
    {"braceleftbt", 0xF8F3},
    {"braceleftmid", 0xF8F2},
    {"bracelefttp", 0xF8F1},
    {"braceright", 0x007D},
    {"bracerightbt", 0xF8FE},
    {"bracerightmid", 0xF8FD},
    {"bracerighttp", 0xF8FC},
    {"bracketleft", 0x005B},
    {"bracketleftbt", 0xF8F0},
    {"bracketleftex", 0xF8EF},
    {"bracketlefttp", 0xF8EE},
    {"bracketright", 0x005D},
    {"bracketrightbt", 0xF8FB},
    {"bracketrightex", 0xF8FA},
    {"bracketrighttp", 0xF8F9},
    {"breve", 0x02D8},
    {"brokenbar", 0x00A6},
    {"bullet", 0x007F},
    {"c", 0x0063},
    {"caron", 0x02C7},
    {"carriagereturn", 0x21B5},
    {"ccedilla", 0x00E7},
    {"cedilla", 0x00B8},
    {"cent", 0x00A2},
    {"chi", 0x03C7},
    {"circlemultiply", 0x2297},
    {"circleplus", 0x2295},
    {"circumflex", 0x02C6},
    {"club", 0x2663},
    {"colon", 0x003A},
    {"comma", 0x002C},
    {"congruent", 0x2245},
    {"copyright", 0x00A9},
    {"copyrightsans", 0xF8E9},
    {"copyrightserif", 0xF6D9},
    {"currency", 0x00A4},
    {"d", 0x0064},
    {"dagger", 0x2020},
    {"daggerdbl", 0x2021},
    {"degree", 0x00B0},
    {"delta", 0x03B4},
    {"diamond", 0x2666},
    {"dieresis", 0x00A8},
    {"divide", 0x00F7},
    {"dollar", 0x0024},
    {"dotaccent", 0x02D9},
    {"dotlessi", 0x0131},
    {"dotmath", 0x22C5},
    {"e", 0x0065},
    {"eacute", 0x00E9},
    {"ecircumflex", 0x00EA},
    {"edieresis", 0x00EB},
    {"egrave", 0x00E8},
    {"eight", 0x0038},
    {"element", 0x2208},
    {"ellipsis", 0x2026},
    {"emdash", 0x2014},
    {"emptyset", 0x2205},
    {"endash", 0x2013},
    {"epsilon", 0x03B5},
    {"equal", 0x003D},
    {"equivalence", 0x2261},
    {"eta", 0x03B7},
    {"eth", 0x00F0},
    {"exclam", 0x0021},
    {"exclamdown", 0x00A1},
    {"existential", 0x2203},
    {"f", 0x0066},
    {"ff", 0xFB00},
    {"ffi", 0xFB03},
    {"ffl", 0xFB04},
    {"fi", 0xFB01},
    {"five", 0x0035},
    {"fl", 0xFB02},
    {"florin", 0x0192},
    {"four", 0x0034},
    {"fraction", 0x2044},
    {"g", 0x0067},
    {"gamma", 0x03B3},
    {"germandbls", 0x00DF},
    {"gradient", 0x2207},
    {"grave", 0x0060},
    {"greater", 0x003E},
    {"greaterequal", 0x2265},
    {"guillemotleft", 0x00AB},
    {"guillemotright", 0x00BB},
    {"guilsinglleft", 0x2039},
    {"guilsinglright", 0x203A},
    {"h", 0x0068},
    {"heart", 0x2665},
    {"hungarumlaut", 0x02DD},
    {"hyphen", 0x002D},
    {"i", 0x0069},
    {"iacute", 0x00ED},
    {"icircumflex", 0x00EE},
    {"idieresis", 0x00EF},
    {"igrave", 0x00EC},
    {"infinity", 0x221E},
    {"integral", 0x222B},
    {"integralbt", 0x2321},
    {"integralex", 0xF8F5},
    {"integraltp", 0x2320},
    {"intersection", 0x2229},
    {"iota", 0x03B9},
    {"j", 0x006A},
    {"k", 0x006B},
    {"kappa", 0x03BA},
    {"l", 0x006C},
    {"lambda", 0x03BB},
    {"less", 0x003C},
    {"lessequal", 0x2264},
    {"logicaland", 0x2227},
    {"logicalnot", 0x00AC},
    {"logicalor", 0x2228},
    {"lozenge", 0x25CA},
    {"lslash", 0x0142},
    {"m", 0x006D},
    {"macron", 0x00AF},
    {"minus", 0x2212},
    {"minute", 0x2032},
    {"mu", 0x00B5},
    {"multiply", 0x00D7},
    {"n", 0x006E},
    {"nbspace", 0x00A0},
    {"nine", 0x0039},
    {"notelement", 0x2209},
    {"notequal", 0x2260},
    {"notsubset", 0x2284},
    {"ntilde", 0x00F1},
    {"nu", 0x03BD},
    {"numbersign", 0x0023},
    {"o", 0x006F},
    {"oacute", 0x00F3},
    {"ocircumflex", 0x00F4},
    {"odieresis", 0x00F6},
    {"oe", 0x0153},
    {"ogonek", 0x02DB},
    {"ograve", 0x00F2},
    {"omega", 0x03C9},
    {"omega1", 0x03D6},
    {"omicron", 0x03BF},
    {"one", 0x0031},
    {"onehalf", 0x00BD},
    {"onequarter", 0x00BC},
    {"onesuperior", 0x00B9},
    {"ordfeminine", 0x00AA},
    {"ordmasculine", 0x00BA},
    {"oslash", 0x00F8},
    {"otilde", 0x00F5},
    {"p", 0x0070},
    {"paragraph", 0x00B6},
    {"parenleft", 0x0028},
    {"parenleftbt", 0xF8ED},
    {"parenleftex", 0xF8EC},
    {"parenlefttp", 0xF8EB},
    {"parenright", 0x0029},
    {"parenrightbt", 0xF8F8},
    {"parenrightex", 0xF8F7},
    {"parenrighttp", 0xF8F6},
    {"partialdiff", 0x2202},
    {"percent", 0x0025},
    {"period", 0x002E},
    {"periodcentered", 0x00B7},
    {"perpendicular", 0x22A5},
    {"perthousand", 0x2030},
    {"phi", 0x03C6},
    {"phi1", 0x03D5},
    {"pi", 0x03C0},
    {"plus", 0x002B},
    {"plusminus", 0x00B1},
    {"product", 0x220F},
    {"propersubset", 0x2282},
    {"propersuperset", 0x2283},
    {"proportional", 0x221D},
    {"psi", 0x03C8},
    {"q", 0x0071},
    {"question", 0x003F},
    {"questiondown", 0x00BF},
    {"quotedbl", 0x0022},
    {"quotedblbase", 0x201E},
    {"quotedblleft", 0x201C},
    {"quotedblright", 0x201D},
    {"quoteleft", 0x2018},
    {"quoteright", 0x2019},
    {"quotesinglbase", 0x201A},
    {"quotesingle", 0x0027},
    {"r", 0x0072},
    {"radical", 0x221A},
    {"radicalex", 0xF8E5},
    {"reflexsubset", 0x2286},
    {"reflexsuperset", 0x2287},
    {"registered", 0x00AE},
    {"registersans", 0xF8E8},
    {"registerserif", 0xF6DA},
    {"rho", 0x03C1},
    {"ring", 0x02DA},
    {"s", 0x0073},
    {"scaron", 0x0161},
    {"second", 0x2033},
    {"section", 0x00A7},
    {"semicolon", 0x003B},
    {"seven", 0x0037},
    {"sfthyphen", 0x00AD},
    {"sigma", 0x03C3},
    {"sigma1", 0x03C2},
    {"similar", 0x223C},
    {"six", 0x0036},
    {"slash", 0x002F},
    {"space", 0x0020},
    {"spade", 0x2660},
    {"sterling", 0x00A3},
    {"suchthat", 0x220B},
    {"summation", 0x2211},
    {"t", 0x0074},
    {"tau", 0x03C4},
    {"therefore", 0x2234},
    {"theta", 0x03B8},
    {"theta1", 0x03D1},
    {"thorn", 0x00FE},
    {"three", 0x0033},
    {"threequarters", 0x00BE},
    {"threesuperior", 0x00B3},
    {"tilde", 0x02DC},
    {"trademark", 0x2122},
    {"trademarksans", 0xF8EA},
    {"trademarkserif", 0xF6DB},
    {"two", 0x0032},
    {"twosuperior", 0x00B2},
    {"u", 0x0075},
    {"uacute", 0x00FA},
    {"ucircumflex", 0x00FB},
    {"udieresis", 0x00FC},
    {"ugrave", 0x00F9},
    {"underscore", 0x005F},
    {"union", 0x222A},
    {"universal", 0x2200},
    {"upsilon", 0x03C5},
    {"v", 0x0076},
    {"w", 0x0077},
    {"weierstrass", 0x2118},
    {"x", 0x0078},
    {"xi", 0x03BE},
    {"y", 0x0079},
    {"yacute", 0x00FD},
    {"ydieresis", 0x00FF},
    {"yen", 0x00A5},
    {"z", 0x007A},
    {"zcaron", 0x017E},
    {"zero", 0x0030},
    {"zeta", 0x03B6},
};
const std::size_t kGlyphUnicodeCount = 579;

static const GlyphWidth kWidths_Courier[229] = {
    {"A", 600},
    {"AE", 600},
    {"Aacute", 600},
    {"Acircumflex", 600},
    {"Adieresis", 600},
    {"Agrave", 600},
    {"Aring", 600},
    {"Atilde", 600},
    {"B", 600},
    {"C", 600},
    {"Ccedilla", 600},
    {"D", 600},
    {"E", 600},
    {"Eacute", 600},
    {"Ecircumflex", 600},
    {"Edieresis", 600},
    {"Egrave", 600},
    {"Eth", 600},
    {"Euro", 600},
    {"F", 600},
    {"G", 600},
    {"H", 600},
    {"I", 600},
    {"Iacute", 600},
    {"Icircumflex", 600},
    {"Idieresis", 600},
    {"Igrave", 600},
    {"J", 600},
    {"K", 600},
    {"L", 600},
    {"Lslash", 600},
    {"M", 600},
    {"N", 600},
    {"Ntilde", 600},
    {"O", 600},
    {"OE", 600},
    {"Oacute", 600},
    {"Ocircumflex", 600},
    {"Odieresis", 600},
    {"Ograve", 600},
    {"Oslash", 600},
    {"Otilde", 600},
    {"P", 600},
    {"Q", 600},
    {"R", 600},
    {"S", 600},
    {"Scaron", 600},
    {"T", 600},
    {"Thorn", 600},
    {"U", 600},
    {"Uacute", 600},
    {"Ucircumflex", 600},
    {"Udieresis", 600},
    {"Ugrave", 600},
    {"V", 600},
    {"W", 600},
    {"X", 600},
    {"Y", 600},
    {"Yacute", 600},
    {"Ydieresis", 600},
    {"Z", 600},
    {"Zcaron", 600},
    {"a", 600},
    {"aacute", 600},
    {"acircumflex", 600},
    {"acute", 600},
    {"adieresis", 600},
    {"ae", 600},
    {"agrave", 600},
    {"ampersand", 600},
    {"aring", 600},
    {"asciicircum", 600},
    {"asciitilde", 600},
    {"asterisk", 600},
    {"at", 600},
    {"atilde", 600},
    {"b", 600},
    {"backslash", 600},
    {"bar", 600},
    {"braceleft", 600},
    {"braceright", 600},
    {"bracketleft", 600},
    {"bracketright", 600},
    {"breve", 600},
    {"brokenbar", 600},
    {"bullet", 600},
    {"c", 600},
    {"caron", 600},
    {"ccedilla", 600},
    {"cedilla", 600},
    {"cent", 600},
    {"circumflex", 600},
    {"colon", 600},
    {"comma", 600},
    {"copyright", 600},
    {"currency", 600},
    {"d", 600},
    {"dagger", 600},
    {"daggerdbl", 600},
    {"degree", 600},
    {"dieresis", 600},
    {"divide", 600},
    {"dollar", 600},
    {"dotaccent", 600},
    {"dotlessi", 600},
    {"e", 600},
    {"eacute", 600},
    {"ecircumflex", 600},
    {"edieresis", 600},
    {"egrave", 600},
    {"eight", 600},
    {"ellipsis", 600},
    {"emdash", 600},
    {"endash", 600},
    {"equal", 600},
    {"eth", 600},
    {"exclam", 600},
    {"exclamdown", 600},
    {"f", 600},
    {"fi", 600},
    {"five", 600},
    {"fl", 600},
    {"florin", 600},
    {"four", 600},
    {"fraction", 600},
    {"g", 600},
    {"germandbls", 600},
    {"grave", 600},
    {"greater", 600},
    {"guillemotleft", 600},
    {"guillemotright", 600},
    {"guilsinglleft", 600},
    {"guilsinglright", 600},
    {"h", 600},
    {"hungarumlaut", 600},
    {"hyphen", 600},
    {"i", 600},
    {"iacute", 600},
    {"icircumflex", 600},
    {"idieresis", 600},
    {"igrave", 600},
    {"j", 600},
    {"k", 600},
    {"l", 600},
    {"less", 600},
    {"logicalnot", 600},
    {"lslash", 600},
    {"m", 600},
    {"macron", 600},
    {"minus", 600},
    {"mu", 600},
    {"multiply", 600},
    {"n", 600},
    {"nine", 600},
    {"ntilde", 600},
    {"numbersign", 600},
    {"o", 600},
    {"oacute", 600},
    {"ocircumflex", 600},
    {"odieresis", 600},
    {"oe", 600},
    {"ogonek", 600},
    {"ograve", 600},
    {"one", 600},
    {"onehalf", 600},
    {"onequarter", 600},
    {"onesuperior", 600},
    {"ordfeminine", 600},
    {"ordmasculine", 600},
    {"oslash", 600},
    {"otilde", 600},
    {"p", 600},
    {"paragraph", 600},
    {"parenleft", 600},
    {"parenright", 600},
    {"percent", 600},
    {"period", 600},
    {"periodcentered", 600},
    {"perthousand", 600},
    {"plus", 600},
    {"plusminus", 600},
    {"q", 600},
    {"question", 600},
    {"questiondown", 600},
    {"quotedbl", 600},
    {"quotedblbase", 600},
    {"quotedblleft", 600},
    {"quotedblright", 600},
    {"quoteleft", 600},
    {"quoteright", 600},
    {"quotesinglbase", 600},
    {"quotesingle", 600},
    {"r", 600},
    {"registered", 600},
    {"ring", 600},
    {"s", 600},
    {"scaron", 600},
    {"section", 600},
    {"semicolon", 600},
    {"seven", 600},
    {"six", 600},
    {"slash", 600},
    {"space", 600},
    {"sterling", 600},
    {"t", 600},
    {"thorn", 600},
    {"three", 600},
    {"threequarters", 600},
    {"threesuperior", 600},
    {"tilde", 600},
    {"trademark", 600},
    {"two", 600},
    {"twosuperior", 600},
    {"u", 600},
    {"uacute", 600},
    {"ucircumflex", 600},
    {"udieresis", 600},
    {"ugrave", 600},
    {"underscore", 600},
    {"v", 600},
    {"w", 600},
    {"x", 600},
    {"y", 600},
    {"yacute", 600},
    {"ydieresis", 600},
    {"yen", 600},
    {"z", 600},
    {"zcaron", 600},
    {"zero", 600},
};

static const GlyphWidth kWidths_Courier_Bold[229] = {
    {"A", 600},
    {"AE", 600},
    {"Aacute", 600},
    {"Acircumflex", 600},
    {"Adieresis", 600},
    {"Agrave", 600},
    {"Aring", 600},
    {"Atilde", 600},
    {"B", 600},
    {"C", 600},
    {"Ccedilla", 600},
    {"D", 600},
    {"E", 600},
    {"Eacute", 600},
    {"Ecircumflex", 600},
    {"Edieresis", 600},
    {"Egrave", 600},
    {"Eth", 600},
    {"Euro", 600},
    {"F", 600},
    {"G", 600},
    {"H", 600},
    {"I", 600},
    {"Iacute", 600},
    {"Icircumflex", 600},
    {"Idieresis", 600},
    {"Igrave", 600},
    {"J", 600},
    {"K", 600},
    {"L", 600},
    {"Lslash", 600},
    {"M", 600},
    {"N", 600},
    {"Ntilde", 600},
    {"O", 600},
    {"OE", 600},
    {"Oacute", 600},
    {"Ocircumflex", 600},
    {"Odieresis", 600},
    {"Ograve", 600},
    {"Oslash", 600},
    {"Otilde", 600},
    {"P", 600},
    {"Q", 600},
    {"R", 600},
    {"S", 600},
    {"Scaron", 600},
    {"T", 600},
    {"Thorn", 600},
    {"U", 600},
    {"Uacute", 600},
    {"Ucircumflex", 600},
    {"Udieresis", 600},
    {"Ugrave", 600},
    {"V", 600},
    {"W", 600},
    {"X", 600},
    {"Y", 600},
    {"Yacute", 600},
    {"Ydieresis", 600},
    {"Z", 600},
    {"Zcaron", 600},
    {"a", 600},
    {"aacute", 600},
    {"acircumflex", 600},
    {"acute", 600},
    {"adieresis", 600},
    {"ae", 600},
    {"agrave", 600},
    {"ampersand", 600},
    {"aring", 600},
    {"asciicircum", 600},
    {"asciitilde", 600},
    {"asterisk", 600},
    {"at", 600},
    {"atilde", 600},
    {"b", 600},
    {"backslash", 600},
    {"bar", 600},
    {"braceleft", 600},
    {"braceright", 600},
    {"bracketleft", 600},
    {"bracketright", 600},
    {"breve", 600},
    {"brokenbar", 600},
    {"bullet", 600},
    {"c", 600},
    {"caron", 600},
    {"ccedilla", 600},
    {"cedilla", 600},
    {"cent", 600},
    {"circumflex", 600},
    {"colon", 600},
    {"comma", 600},
    {"copyright", 600},
    {"currency", 600},
    {"d", 600},
    {"dagger", 600},
    {"daggerdbl", 600},
    {"degree", 600},
    {"dieresis", 600},
    {"divide", 600},
    {"dollar", 600},
    {"dotaccent", 600},
    {"dotlessi", 600},
    {"e", 600},
    {"eacute", 600},
    {"ecircumflex", 600},
    {"edieresis", 600},
    {"egrave", 600},
    {"eight", 600},
    {"ellipsis", 600},
    {"emdash", 600},
    {"endash", 600},
    {"equal", 600},
    {"eth", 600},
    {"exclam", 600},
    {"exclamdown", 600},
    {"f", 600},
    {"fi", 600},
    {"five", 600},
    {"fl", 600},
    {"florin", 600},
    {"four", 600},
    {"fraction", 600},
    {"g", 600},
    {"germandbls", 600},
    {"grave", 600},
    {"greater", 600},
    {"guillemotleft", 600},
    {"guillemotright", 600},
    {"guilsinglleft", 600},
    {"guilsinglright", 600},
    {"h", 600},
    {"hungarumlaut", 600},
    {"hyphen", 600},
    {"i", 600},
    {"iacute", 600},
    {"icircumflex", 600},
    {"idieresis", 600},
    {"igrave", 600},
    {"j", 600},
    {"k", 600},
    {"l", 600},
    {"less", 600},
    {"logicalnot", 600},
    {"lslash", 600},
    {"m", 600},
    {"macron", 600},
    {"minus", 600},
    {"mu", 600},
    {"multiply", 600},
    {"n", 600},
    {"nine", 600},
    {"ntilde", 600},
    {"numbersign", 600},
    {"o", 600},
    {"oacute", 600},
    {"ocircumflex", 600},
    {"odieresis", 600},
    {"oe", 600},
    {"ogonek", 600},
    {"ograve", 600},
    {"one", 600},
    {"onehalf", 600},
    {"onequarter", 600},
    {"onesuperior", 600},
    {"ordfeminine", 600},
    {"ordmasculine", 600},
    {"oslash", 600},
    {"otilde", 600},
    {"p", 600},
    {"paragraph", 600},
    {"parenleft", 600},
    {"parenright", 600},
    {"percent", 600},
    {"period", 600},
    {"periodcentered", 600},
    {"perthousand", 600},
    {"plus", 600},
    {"plusminus", 600},
    {"q", 600},
    {"question", 600},
    {"questiondown", 600},
    {"quotedbl", 600},
    {"quotedblbase", 600},
    {"quotedblleft", 600},
    {"quotedblright", 600},
    {"quoteleft", 600},
    {"quoteright", 600},
    {"quotesinglbase", 600},
    {"quotesingle", 600},
    {"r", 600},
    {"registered", 600},
    {"ring", 600},
    {"s", 600},
    {"scaron", 600},
    {"section", 600},
    {"semicolon", 600},
    {"seven", 600},
    {"six", 600},
    {"slash", 600},
    {"space", 600},
    {"sterling", 600},
    {"t", 600},
    {"thorn", 600},
    {"three", 600},
    {"threequarters", 600},
    {"threesuperior", 600},
    {"tilde", 600},
    {"trademark", 600},
    {"two", 600},
    {"twosuperior", 600},
    {"u", 600},
    {"uacute", 600},
    {"ucircumflex", 600},
    {"udieresis", 600},
    {"ugrave", 600},
    {"underscore", 600},
    {"v", 600},
    {"w", 600},
    {"x", 600},
    {"y", 600},
    {"yacute", 600},
    {"ydieresis", 600},
    {"yen", 600},
    {"z", 600},
    {"zcaron", 600},
    {"zero", 600},
};

static const GlyphWidth kWidths_Courier_Oblique[229] = {
    {"A", 600},
    {"AE", 600},
    {"Aacute", 600},
    {"Acircumflex", 600},
    {"Adieresis", 600},
    {"Agrave", 600},
    {"Aring", 600},
    {"Atilde", 600},
    {"B", 600},
    {"C", 600},
    {"Ccedilla", 600},
    {"D", 600},
    {"E", 600},
    {"Eacute", 600},
    {"Ecircumflex", 600},
    {"Edieresis", 600},
    {"Egrave", 600},
    {"Eth", 600},
    {"Euro", 600},
    {"F", 600},
    {"G", 600},
    {"H", 600},
    {"I", 600},
    {"Iacute", 600},
    {"Icircumflex", 600},
    {"Idieresis", 600},
    {"Igrave", 600},
    {"J", 600},
    {"K", 600},
    {"L", 600},
    {"Lslash", 600},
    {"M", 600},
    {"N", 600},
    {"Ntilde", 600},
    {"O", 600},
    {"OE", 600},
    {"Oacute", 600},
    {"Ocircumflex", 600},
    {"Odieresis", 600},
    {"Ograve", 600},
    {"Oslash", 600},
    {"Otilde", 600},
    {"P", 600},
    {"Q", 600},
    {"R", 600},
    {"S", 600},
    {"Scaron", 600},
    {"T", 600},
    {"Thorn", 600},
    {"U", 600},
    {"Uacute", 600},
    {"Ucircumflex", 600},
    {"Udieresis", 600},
    {"Ugrave", 600},
    {"V", 600},
    {"W", 600},
    {"X", 600},
    {"Y", 600},
    {"Yacute", 600},
    {"Ydieresis", 600},
    {"Z", 600},
    {"Zcaron", 600},
    {"a", 600},
    {"aacute", 600},
    {"acircumflex", 600},
    {"acute", 600},
    {"adieresis", 600},
    {"ae", 600},
    {"agrave", 600},
    {"ampersand", 600},
    {"aring", 600},
    {"asciicircum", 600},
    {"asciitilde", 600},
    {"asterisk", 600},
    {"at", 600},
    {"atilde", 600},
    {"b", 600},
    {"backslash", 600},
    {"bar", 600},
    {"braceleft", 600},
    {"braceright", 600},
    {"bracketleft", 600},
    {"bracketright", 600},
    {"breve", 600},
    {"brokenbar", 600},
    {"bullet", 600},
    {"c", 600},
    {"caron", 600},
    {"ccedilla", 600},
    {"cedilla", 600},
    {"cent", 600},
    {"circumflex", 600},
    {"colon", 600},
    {"comma", 600},
    {"copyright", 600},
    {"currency", 600},
    {"d", 600},
    {"dagger", 600},
    {"daggerdbl", 600},
    {"degree", 600},
    {"dieresis", 600},
    {"divide", 600},
    {"dollar", 600},
    {"dotaccent", 600},
    {"dotlessi", 600},
    {"e", 600},
    {"eacute", 600},
    {"ecircumflex", 600},
    {"edieresis", 600},
    {"egrave", 600},
    {"eight", 600},
    {"ellipsis", 600},
    {"emdash", 600},
    {"endash", 600},
    {"equal", 600},
    {"eth", 600},
    {"exclam", 600},
    {"exclamdown", 600},
    {"f", 600},
    {"fi", 600},
    {"five", 600},
    {"fl", 600},
    {"florin", 600},
    {"four", 600},
    {"fraction", 600},
    {"g", 600},
    {"germandbls", 600},
    {"grave", 600},
    {"greater", 600},
    {"guillemotleft", 600},
    {"guillemotright", 600},
    {"guilsinglleft", 600},
    {"guilsinglright", 600},
    {"h", 600},
    {"hungarumlaut", 600},
    {"hyphen", 600},
    {"i", 600},
    {"iacute", 600},
    {"icircumflex", 600},
    {"idieresis", 600},
    {"igrave", 600},
    {"j", 600},
    {"k", 600},
    {"l", 600},
    {"less", 600},
    {"logicalnot", 600},
    {"lslash", 600},
    {"m", 600},
    {"macron", 600},
    {"minus", 600},
    {"mu", 600},
    {"multiply", 600},
    {"n", 600},
    {"nine", 600},
    {"ntilde", 600},
    {"numbersign", 600},
    {"o", 600},
    {"oacute", 600},
    {"ocircumflex", 600},
    {"odieresis", 600},
    {"oe", 600},
    {"ogonek", 600},
    {"ograve", 600},
    {"one", 600},
    {"onehalf", 600},
    {"onequarter", 600},
    {"onesuperior", 600},
    {"ordfeminine", 600},
    {"ordmasculine", 600},
    {"oslash", 600},
    {"otilde", 600},
    {"p", 600},
    {"paragraph", 600},
    {"parenleft", 600},
    {"parenright", 600},
    {"percent", 600},
    {"period", 600},
    {"periodcentered", 600},
    {"perthousand", 600},
    {"plus", 600},
    {"plusminus", 600},
    {"q", 600},
    {"question", 600},
    {"questiondown", 600},
    {"quotedbl", 600},
    {"quotedblbase", 600},
    {"quotedblleft", 600},
    {"quotedblright", 600},
    {"quoteleft", 600},
    {"quoteright", 600},
    {"quotesinglbase", 600},
    {"quotesingle", 600},
    {"r", 600},
    {"registered", 600},
    {"ring", 600},
    {"s", 600},
    {"scaron", 600},
    {"section", 600},
    {"semicolon", 600},
    {"seven", 600},
    {"six", 600},
    {"slash", 600},
    {"space", 600},
    {"sterling", 600},
    {"t", 600},
    {"thorn", 600},
    {"three", 600},
    {"threequarters", 600},
    {"threesuperior", 600},
    {"tilde", 600},
    {"trademark", 600},
    {"two", 600},
    {"twosuperior", 600},
    {"u", 600},
    {"uacute", 600},
    {"ucircumflex", 600},
    {"udieresis", 600},
    {"ugrave", 600},
    {"underscore", 600},
    {"v", 600},
    {"w", 600},
    {"x", 600},
    {"y", 600},
    {"yacute", 600},
    {"ydieresis", 600},
    {"yen", 600},
    {"z", 600},
    {"zcaron", 600},
    {"zero", 600},
};

static const GlyphWidth kWidths_Courier_BoldOblique[229] = {
    {"A", 600},
    {"AE", 600},
    {"Aacute", 600},
    {"Acircumflex", 600},
    {"Adieresis", 600},
    {"Agrave", 600},
    {"Aring", 600},
    {"Atilde", 600},
    {"B", 600},
    {"C", 600},
    {"Ccedilla", 600},
    {"D", 600},
    {"E", 600},
    {"Eacute", 600},
    {"Ecircumflex", 600},
    {"Edieresis", 600},
    {"Egrave", 600},
    {"Eth", 600},
    {"Euro", 600},
    {"F", 600},
    {"G", 600},
    {"H", 600},
    {"I", 600},
    {"Iacute", 600},
    {"Icircumflex", 600},
    {"Idieresis", 600},
    {"Igrave", 600},
    {"J", 600},
    {"K", 600},
    {"L", 600},
    {"Lslash", 600},
    {"M", 600},
    {"N", 600},
    {"Ntilde", 600},
    {"O", 600},
    {"OE", 600},
    {"Oacute", 600},
    {"Ocircumflex", 600},
    {"Odieresis", 600},
    {"Ograve", 600},
    {"Oslash", 600},
    {"Otilde", 600},
    {"P", 600},
    {"Q", 600},
    {"R", 600},
    {"S", 600},
    {"Scaron", 600},
    {"T", 600},
    {"Thorn", 600},
    {"U", 600},
    {"Uacute", 600},
    {"Ucircumflex", 600},
    {"Udieresis", 600},
    {"Ugrave", 600},
    {"V", 600},
    {"W", 600},
    {"X", 600},
    {"Y", 600},
    {"Yacute", 600},
    {"Ydieresis", 600},
    {"Z", 600},
    {"Zcaron", 600},
    {"a", 600},
    {"aacute", 600},
    {"acircumflex", 600},
    {"acute", 600},
    {"adieresis", 600},
    {"ae", 600},
    {"agrave", 600},
    {"ampersand", 600},
    {"aring", 600},
    {"asciicircum", 600},
    {"asciitilde", 600},
    {"asterisk", 600},
    {"at", 600},
    {"atilde", 600},
    {"b", 600},
    {"backslash", 600},
    {"bar", 600},
    {"braceleft", 600},
    {"braceright", 600},
    {"bracketleft", 600},
    {"bracketright", 600},
    {"breve", 600},
    {"brokenbar", 600},
    {"bullet", 600},
    {"c", 600},
    {"caron", 600},
    {"ccedilla", 600},
    {"cedilla", 600},
    {"cent", 600},
    {"circumflex", 600},
    {"colon", 600},
    {"comma", 600},
    {"copyright", 600},
    {"currency", 600},
    {"d", 600},
    {"dagger", 600},
    {"daggerdbl", 600},
    {"degree", 600},
    {"dieresis", 600},
    {"divide", 600},
    {"dollar", 600},
    {"dotaccent", 600},
    {"dotlessi", 600},
    {"e", 600},
    {"eacute", 600},
    {"ecircumflex", 600},
    {"edieresis", 600},
    {"egrave", 600},
    {"eight", 600},
    {"ellipsis", 600},
    {"emdash", 600},
    {"endash", 600},
    {"equal", 600},
    {"eth", 600},
    {"exclam", 600},
    {"exclamdown", 600},
    {"f", 600},
    {"fi", 600},
    {"five", 600},
    {"fl", 600},
    {"florin", 600},
    {"four", 600},
    {"fraction", 600},
    {"g", 600},
    {"germandbls", 600},
    {"grave", 600},
    {"greater", 600},
    {"guillemotleft", 600},
    {"guillemotright", 600},
    {"guilsinglleft", 600},
    {"guilsinglright", 600},
    {"h", 600},
    {"hungarumlaut", 600},
    {"hyphen", 600},
    {"i", 600},
    {"iacute", 600},
    {"icircumflex", 600},
    {"idieresis", 600},
    {"igrave", 600},
    {"j", 600},
    {"k", 600},
    {"l", 600},
    {"less", 600},
    {"logicalnot", 600},
    {"lslash", 600},
    {"m", 600},
    {"macron", 600},
    {"minus", 600},
    {"mu", 600},
    {"multiply", 600},
    {"n", 600},
    {"nine", 600},
    {"ntilde", 600},
    {"numbersign", 600},
    {"o", 600},
    {"oacute", 600},
    {"ocircumflex", 600},
    {"odieresis", 600},
    {"oe", 600},
    {"ogonek", 600},
    {"ograve", 600},
    {"one", 600},
    {"onehalf", 600},
    {"onequarter", 600},
    {"onesuperior", 600},
    {"ordfeminine", 600},
    {"ordmasculine", 600},
    {"oslash", 600},
    {"otilde", 600},
    {"p", 600},
    {"paragraph", 600},
    {"parenleft", 600},
    {"parenright", 600},
    {"percent", 600},
    {"period", 600},
    {"periodcentered", 600},
    {"perthousand", 600},
    {"plus", 600},
    {"plusminus", 600},
    {"q", 600},
    {"question", 600},
    {"questiondown", 600},
    {"quotedbl", 600},
    {"quotedblbase", 600},
    {"quotedblleft", 600},
    {"quotedblright", 600},
    {"quoteleft", 600},
    {"quoteright", 600},
    {"quotesinglbase", 600},
    {"quotesingle", 600},
    {"r", 600},
    {"registered", 600},
    {"ring", 600},
    {"s", 600},
    {"scaron", 600},
    {"section", 600},
    {"semicolon", 600},
    {"seven", 600},
    {"six", 600},
    {"slash", 600},
    {"space", 600},
    {"sterling", 600},
    {"t", 600},
    {"thorn", 600},
    {"three", 600},
    {"threequarters", 600},
    {"threesuperior", 600},
    {"tilde", 600},
    {"trademark", 600},
    {"two", 600},
    {"twosuperior", 600},
    {"u", 600},
    {"uacute", 600},
    {"ucircumflex", 600},
    {"udieresis", 600},
    {"ugrave", 600},
    {"underscore", 600},
    {"v", 600},
    {"w", 600},
    {"x", 600},
    {"y", 600},
    {"yacute", 600},
    {"ydieresis", 600},
    {"yen", 600},
    {"z", 600},
    {"zcaron", 600},
    {"zero", 600},
};

static const GlyphWidth kWidths_Helvetica[229] = {
    {"A", 667},
    {"AE", 1000},
    {"Aacute", 667},
    {"Acircumflex", 667},
    {"Adieresis", 667},
    {"Agrave", 667},
    {"Aring", 667},
    {"Atilde", 667},
    {"B", 667},
    {"C", 722},
    {"Ccedilla", 722},
    {"D", 722},
    {"E", 667},
    {"Eacute", 667},
    {"Ecircumflex", 667},
    {"Edieresis", 667},
    {"Egrave", 667},
    {"Eth", 722},
    {"Euro", 556},
    {"F", 611},
    {"G", 778},
    {"H", 722},
    {"I", 278},
    {"Iacute", 278},
    {"Icircumflex", 278},
    {"Idieresis", 278},
    {"Igrave", 278},
    {"J", 500},
    {"K", 667},
    {"L", 556},
    {"Lslash", 556},
    {"M", 833},
    {"N", 722},
    {"Ntilde", 722},
    {"O", 778},
    {"OE", 1000},
    {"Oacute", 778},
    {"Ocircumflex", 778},
    {"Odieresis", 778},
    {"Ograve", 778},
    {"Oslash", 778},
    {"Otilde", 778},
    {"P", 667},
    {"Q", 778},
    {"R", 722},
    {"S", 667},
    {"Scaron", 667},
    {"T", 611},
    {"Thorn", 667},
    {"U", 722},
    {"Uacute", 722},
    {"Ucircumflex", 722},
    {"Udieresis", 722},
    {"Ugrave", 722},
    {"V", 667},
    {"W", 944},
    {"X", 667},
    {"Y", 667},
    {"Yacute", 667},
    {"Ydieresis", 667},
    {"Z", 611},
    {"Zcaron", 611},
    {"a", 556},
    {"aacute", 556},
    {"acircumflex", 556},
    {"acute", 333},
    {"adieresis", 556},
    {"ae", 889},
    {"agrave", 556},
    {"ampersand", 667},
    {"aring", 556},
    {"asciicircum", 469},
    {"asciitilde", 584},
    {"asterisk", 389},
    {"at", 1015},
    {"atilde", 556},
    {"b", 556},
    {"backslash", 278},
    {"bar", 260},
    {"braceleft", 334},
    {"braceright", 334},
    {"bracketleft", 278},
    {"bracketright", 278},
    {"breve", 333},
    {"brokenbar", 260},
    {"bullet", 350},
    {"c", 500},
    {"caron", 333},
    {"ccedilla", 500},
    {"cedilla", 333},
    {"cent", 556},
    {"circumflex", 333},
    {"colon", 278},
    {"comma", 278},
    {"copyright", 737},
    {"currency", 556},
    {"d", 556},
    {"dagger", 556},
    {"daggerdbl", 556},
    {"degree", 400},
    {"dieresis", 333},
    {"divide", 584},
    {"dollar", 556},
    {"dotaccent", 333},
    {"dotlessi", 278},
    {"e", 556},
    {"eacute", 556},
    {"ecircumflex", 556},
    {"edieresis", 556},
    {"egrave", 556},
    {"eight", 556},
    {"ellipsis", 1000},
    {"emdash", 1000},
    {"endash", 556},
    {"equal", 584},
    {"eth", 556},
    {"exclam", 278},
    {"exclamdown", 333},
    {"f", 278},
    {"fi", 500},
    {"five", 556},
    {"fl", 500},
    {"florin", 556},
    {"four", 556},
    {"fraction", 167},
    {"g", 556},
    {"germandbls", 611},
    {"grave", 333},
    {"greater", 584},
    {"guillemotleft", 556},
    {"guillemotright", 556},
    {"guilsinglleft", 333},
    {"guilsinglright", 333},
    {"h", 556},
    {"hungarumlaut", 333},
    {"hyphen", 333},
    {"i", 222},
    {"iacute", 278},
    {"icircumflex", 278},
    {"idieresis", 278},
    {"igrave", 278},
    {"j", 222},
    {"k", 500},
    {"l", 222},
    {"less", 584},
    {"logicalnot", 584},
    {"lslash", 222},
    {"m", 833},
    {"macron", 333},
    {"minus", 584},
    {"mu", 556},
    {"multiply", 584},
    {"n", 556},
    {"nine", 556},
    {"ntilde", 556},
    {"numbersign", 556},
    {"o", 556},
    {"oacute", 556},
    {"ocircumflex", 556},
    {"odieresis", 556},
    {"oe", 944},
    {"ogonek", 333},
    {"ograve", 556},
    {"one", 556},
    {"onehalf", 834},
    {"onequarter", 834},
    {"onesuperior", 333},
    {"ordfeminine", 370},
    {"ordmasculine", 365},
    {"oslash", 611},
    {"otilde", 556},
    {"p", 556},
    {"paragraph", 537},
    {"parenleft", 333},
    {"parenright", 333},
    {"percent", 889},
    {"period", 278},
    {"periodcentered", 278},
    {"perthousand", 1000},
    {"plus", 584},
    {"plusminus", 584},
    {"q", 556},
    {"question", 556},
    {"questiondown", 611},
    {"quotedbl", 355},
    {"quotedblbase", 333},
    {"quotedblleft", 333},
    {"quotedblright", 333},
    {"quoteleft", 222},
    {"quoteright", 222},
    {"quotesinglbase", 222},
    {"quotesingle", 191},
    {"r", 333},
    {"registered", 737},
    {"ring", 333},
    {"s", 500},
    {"scaron", 500},
    {"section", 556},
    {"semicolon", 278},
    {"seven", 556},
    {"six", 556},
    {"slash", 278},
    {"space", 278},
    {"sterling", 556},
    {"t", 278},
    {"thorn", 556},
    {"three", 556},
    {"threequarters", 834},
    {"threesuperior", 333},
    {"tilde", 333},
    {"trademark", 1000},
    {"two", 556},
    {"twosuperior", 333},
    {"u", 556},
    {"uacute", 556},
    {"ucircumflex", 556},
    {"udieresis", 556},
    {"ugrave", 556},
    {"underscore", 556},
    {"v", 500},
    {"w", 722},
    {"x", 500},
    {"y", 500},
    {"yacute", 500},
    {"ydieresis", 500},
    {"yen", 556},
    {"z", 500},
    {"zcaron", 500},
    {"zero", 556},
};

static const GlyphWidth kWidths_Helvetica_Bold[229] = {
    {"A", 722},
    {"AE", 1000},
    {"Aacute", 722},
    {"Acircumflex", 722},
    {"Adieresis", 722},
    {"Agrave", 722},
    {"Aring", 722},
    {"Atilde", 722},
    {"B", 722},
    {"C", 722},
    {"Ccedilla", 722},
    {"D", 722},
    {"E", 667},
    {"Eacute", 667},
    {"Ecircumflex", 667},
    {"Edieresis", 667},
    {"Egrave", 667},
    {"Eth", 722},
    {"Euro", 556},
    {"F", 611},
    {"G", 778},
    {"H", 722},
    {"I", 278},
    {"Iacute", 278},
    {"Icircumflex", 278},
    {"Idieresis", 278},
    {"Igrave", 278},
    {"J", 556},
    {"K", 722},
    {"L", 611},
    {"Lslash", 611},
    {"M", 833},
    {"N", 722},
    {"Ntilde", 722},
    {"O", 778},
    {"OE", 1000},
    {"Oacute", 778},
    {"Ocircumflex", 778},
    {"Odieresis", 778},
    {"Ograve", 778},
    {"Oslash", 778},
    {"Otilde", 778},
    {"P", 667},
    {"Q", 778},
    {"R", 722},
    {"S", 667},
    {"Scaron", 667},
    {"T", 611},
    {"Thorn", 667},
    {"U", 722},
    {"Uacute", 722},
    {"Ucircumflex", 722},
    {"Udieresis", 722},
    {"Ugrave", 722},
    {"V", 667},
    {"W", 944},
    {"X", 667},
    {"Y", 667},
    {"Yacute", 667},
    {"Ydieresis", 667},
    {"Z", 611},
    {"Zcaron", 611},
    {"a", 556},
    {"aacute", 556},
    {"acircumflex", 556},
    {"acute", 333},
    {"adieresis", 556},
    {"ae", 889},
    {"agrave", 556},
    {"ampersand", 722},
    {"aring", 556},
    {"asciicircum", 584},
    {"asciitilde", 584},
    {"asterisk", 389},
    {"at", 975},
    {"atilde", 556},
    {"b", 611},
    {"backslash", 278},
    {"bar", 280},
    {"braceleft", 389},
    {"braceright", 389},
    {"bracketleft", 333},
    {"bracketright", 333},
    {"breve", 333},
    {"brokenbar", 280},
    {"bullet", 350},
    {"c", 556},
    {"caron", 333},
    {"ccedilla", 556},
    {"cedilla", 333},
    {"cent", 556},
    {"circumflex", 333},
    {"colon", 333},
    {"comma", 278},
    {"copyright", 737},
    {"currency", 556},
    {"d", 611},
    {"dagger", 556},
    {"daggerdbl", 556},
    {"degree", 400},
    {"dieresis", 333},
    {"divide", 584},
    {"dollar", 556},
    {"dotaccent", 333},
    {"dotlessi", 278},
    {"e", 556},
    {"eacute", 556},
    {"ecircumflex", 556},
    {"edieresis", 556},
    {"egrave", 556},
    {"eight", 556},
    {"ellipsis", 1000},
    {"emdash", 1000},
    {"endash", 556},
    {"equal", 584},
    {"eth", 611},
    {"exclam", 333},
    {"exclamdown", 333},
    {"f", 333},
    {"fi", 611},
    {"five", 556},
    {"fl", 611},
    {"florin", 556},
    {"four", 556},
    {"fraction", 167},
    {"g", 611},
    {"germandbls", 611},
    {"grave", 333},
    {"greater", 584},
    {"guillemotleft", 556},
    {"guillemotright", 556},
    {"guilsinglleft", 333},
    {"guilsinglright", 333},
    {"h", 611},
    {"hungarumlaut", 333},
    {"hyphen", 333},
    {"i", 278},
    {"iacute", 278},
    {"icircumflex", 278},
    {"idieresis", 278},
    {"igrave", 278},
    {"j", 278},
    {"k", 556},
    {"l", 278},
    {"less", 584},
    {"logicalnot", 584},
    {"lslash", 278},
    {"m", 889},
    {"macron", 333},
    {"minus", 584},
    {"mu", 611},
    {"multiply", 584},
    {"n", 611},
    {"nine", 556},
    {"ntilde", 611},
    {"numbersign", 556},
    {"o", 611},
    {"oacute", 611},
    {"ocircumflex", 611},
    {"odieresis", 611},
    {"oe", 944},
    {"ogonek", 333},
    {"ograve", 611},
    {"one", 556},
    {"onehalf", 834},
    {"onequarter", 834},
    {"onesuperior", 333},
    {"ordfeminine", 370},
    {"ordmasculine", 365},
    {"oslash", 611},
    {"otilde", 611},
    {"p", 611},
    {"paragraph", 556},
    {"parenleft", 333},
    {"parenright", 333},
    {"percent", 889},
    {"period", 278},
    {"periodcentered", 278},
    {"perthousand", 1000},
    {"plus", 584},
    {"plusminus", 584},
    {"q", 611},
    {"question", 611},
    {"questiondown", 611},
    {"quotedbl", 474},
    {"quotedblbase", 500},
    {"quotedblleft", 500},
    {"quotedblright", 500},
    {"quoteleft", 278},
    {"quoteright", 278},
    {"quotesinglbase", 278},
    {"quotesingle", 238},
    {"r", 389},
    {"registered", 737},
    {"ring", 333},
    {"s", 556},
    {"scaron", 556},
    {"section", 556},
    {"semicolon", 333},
    {"seven", 556},
    {"six", 556},
    {"slash", 278},
    {"space", 278},
    {"sterling", 556},
    {"t", 333},
    {"thorn", 611},
    {"three", 556},
    {"threequarters", 834},
    {"threesuperior", 333},
    {"tilde", 333},
    {"trademark", 1000},
    {"two", 556},
    {"twosuperior", 333},
    {"u", 611},
    {"uacute", 611},
    {"ucircumflex", 611},
    {"udieresis", 611},
    {"ugrave", 611},
    {"underscore", 556},
    {"v", 556},
    {"w", 778},
    {"x", 556},
    {"y", 556},
    {"yacute", 556},
    {"ydieresis", 556},
    {"yen", 556},
    {"z", 500},
    {"zcaron", 500},
    {"zero", 556},
};

static const GlyphWidth kWidths_Helvetica_Oblique[229] = {
    {"A", 667},
    {"AE", 1000},
    {"Aacute", 667},
    {"Acircumflex", 667},
    {"Adieresis", 667},
    {"Agrave", 667},
    {"Aring", 667},
    {"Atilde", 667},
    {"B", 667},
    {"C", 722},
    {"Ccedilla", 722},
    {"D", 722},
    {"E", 667},
    {"Eacute", 667},
    {"Ecircumflex", 667},
    {"Edieresis", 667},
    {"Egrave", 667},
    {"Eth", 722},
    {"Euro", 556},
    {"F", 611},
    {"G", 778},
    {"H", 722},
    {"I", 278},
    {"Iacute", 278},
    {"Icircumflex", 278},
    {"Idieresis", 278},
    {"Igrave", 278},
    {"J", 500},
    {"K", 667},
    {"L", 556},
    {"Lslash", 556},
    {"M", 833},
    {"N", 722},
    {"Ntilde", 722},
    {"O", 778},
    {"OE", 1000},
    {"Oacute", 778},
    {"Ocircumflex", 778},
    {"Odieresis", 778},
    {"Ograve", 778},
    {"Oslash", 778},
    {"Otilde", 778},
    {"P", 667},
    {"Q", 778},
    {"R", 722},
    {"S", 667},
    {"Scaron", 667},
    {"T", 611},
    {"Thorn", 667},
    {"U", 722},
    {"Uacute", 722},
    {"Ucircumflex", 722},
    {"Udieresis", 722},
    {"Ugrave", 722},
    {"V", 667},
    {"W", 944},
    {"X", 667},
    {"Y", 667},
    {"Yacute", 667},
    {"Ydieresis", 667},
    {"Z", 611},
    {"Zcaron", 611},
    {"a", 556},
    {"aacute", 556},
    {"acircumflex", 556},
    {"acute", 333},
    {"adieresis", 556},
    {"ae", 889},
    {"agrave", 556},
    {"ampersand", 667},
    {"aring", 556},
    {"asciicircum", 469},
    {"asciitilde", 584},
    {"asterisk", 389},
    {"at", 1015},
    {"atilde", 556},
    {"b", 556},
    {"backslash", 278},
    {"bar", 260},
    {"braceleft", 334},
    {"braceright", 334},
    {"bracketleft", 278},
    {"bracketright", 278},
    {"breve", 333},
    {"brokenbar", 260},
    {"bullet", 350},
    {"c", 500},
    {"caron", 333},
    {"ccedilla", 500},
    {"cedilla", 333},
    {"cent", 556},
    {"circumflex", 333},
    {"colon", 278},
    {"comma", 278},
    {"copyright", 737},
    {"currency", 556},
    {"d", 556},
    {"dagger", 556},
    {"daggerdbl", 556},
    {"degree", 400},
    {"dieresis", 333},
    {"divide", 584},
    {"dollar", 556},
    {"dotaccent", 333},
    {"dotlessi", 278},
    {"e", 556},
    {"eacute", 556},
    {"ecircumflex", 556},
    {"edieresis", 556},
    {"egrave", 556},
    {"eight", 556},
    {"ellipsis", 1000},
    {"emdash", 1000},
    {"endash", 556},
    {"equal", 584},
    {"eth", 556},
    {"exclam", 278},
    {"exclamdown", 333},
    {"f", 278},
    {"fi", 500},
    {"five", 556},
    {"fl", 500},
    {"florin", 556},
    {"four", 556},
    {"fraction", 167},
    {"g", 556},
    {"germandbls", 611},
    {"grave", 333},
    {"greater", 584},
    {"guillemotleft", 556},
    {"guillemotright", 556},
    {"guilsinglleft", 333},
    {"guilsinglright", 333},
    {"h", 556},
    {"hungarumlaut", 333},
    {"hyphen", 333},
    {"i", 222},
    {"iacute", 278},
    {"icircumflex", 278},
    {"idieresis", 278},
    {"igrave", 278},
    {"j", 222},
    {"k", 500},
    {"l", 222},
    {"less", 584},
    {"logicalnot", 584},
    {"lslash", 222},
    {"m", 833},
    {"macron", 333},
    {"minus", 584},
    {"mu", 556},
    {"multiply", 584},
    {"n", 556},
    {"nine", 556},
    {"ntilde", 556},
    {"numbersign", 556},
    {"o", 556},
    {"oacute", 556},
    {"ocircumflex", 556},
    {"odieresis", 556},
    {"oe", 944},
    {"ogonek", 333},
    {"ograve", 556},
    {"one", 556},
    {"onehalf", 834},
    {"onequarter", 834},
    {"onesuperior", 333},
    {"ordfeminine", 370},
    {"ordmasculine", 365},
    {"oslash", 611},
    {"otilde", 556},
    {"p", 556},
    {"paragraph", 537},
    {"parenleft", 333},
    {"parenright", 333},
    {"percent", 889},
    {"period", 278},
    {"periodcentered", 278},
    {"perthousand", 1000},
    {"plus", 584},
    {"plusminus", 584},
    {"q", 556},
    {"question", 556},
    {"questiondown", 611},
    {"quotedbl", 355},
    {"quotedblbase", 333},
    {"quotedblleft", 333},
    {"quotedblright", 333},
    {"quoteleft", 222},
    {"quoteright", 222},
    {"quotesinglbase", 222},
    {"quotesingle", 191},
    {"r", 333},
    {"registered", 737},
    {"ring", 333},
    {"s", 500},
    {"scaron", 500},
    {"section", 556},
    {"semicolon", 278},
    {"seven", 556},
    {"six", 556},
    {"slash", 278},
    {"space", 278},
    {"sterling", 556},
    {"t", 278},
    {"thorn", 556},
    {"three", 556},
    {"threequarters", 834},
    {"threesuperior", 333},
    {"tilde", 333},
    {"trademark", 1000},
    {"two", 556},
    {"twosuperior", 333},
    {"u", 556},
    {"uacute", 556},
    {"ucircumflex", 556},
    {"udieresis", 556},
    {"ugrave", 556},
    {"underscore", 556},
    {"v", 500},
    {"w", 722},
    {"x", 500},
    {"y", 500},
    {"yacute", 500},
    {"ydieresis", 500},
    {"yen", 556},
    {"z", 500},
    {"zcaron", 500},
    {"zero", 556},
};

static const GlyphWidth kWidths_Helvetica_BoldOblique[229] = {
    {"A", 722},
    {"AE", 1000},
    {"Aacute", 722},
    {"Acircumflex", 722},
    {"Adieresis", 722},
    {"Agrave", 722},
    {"Aring", 722},
    {"Atilde", 722},
    {"B", 722},
    {"C", 722},
    {"Ccedilla", 722},
    {"D", 722},
    {"E", 667},
    {"Eacute", 667},
    {"Ecircumflex", 667},
    {"Edieresis", 667},
    {"Egrave", 667},
    {"Eth", 722},
    {"Euro", 556},
    {"F", 611},
    {"G", 778},
    {"H", 722},
    {"I", 278},
    {"Iacute", 278},
    {"Icircumflex", 278},
    {"Idieresis", 278},
    {"Igrave", 278},
    {"J", 556},
    {"K", 722},
    {"L", 611},
    {"Lslash", 611},
    {"M", 833},
    {"N", 722},
    {"Ntilde", 722},
    {"O", 778},
    {"OE", 1000},
    {"Oacute", 778},
    {"Ocircumflex", 778},
    {"Odieresis", 778},
    {"Ograve", 778},
    {"Oslash", 778},
    {"Otilde", 778},
    {"P", 667},
    {"Q", 778},
    {"R", 722},
    {"S", 667},
    {"Scaron", 667},
    {"T", 611},
    {"Thorn", 667},
    {"U", 722},
    {"Uacute", 722},
    {"Ucircumflex", 722},
    {"Udieresis", 722},
    {"Ugrave", 722},
    {"V", 667},
    {"W", 944},
    {"X", 667},
    {"Y", 667},
    {"Yacute", 667},
    {"Ydieresis", 667},
    {"Z", 611},
    {"Zcaron", 611},
    {"a", 556},
    {"aacute", 556},
    {"acircumflex", 556},
    {"acute", 333},
    {"adieresis", 556},
    {"ae", 889},
    {"agrave", 556},
    {"ampersand", 722},
    {"aring", 556},
    {"asciicircum", 584},
    {"asciitilde", 584},
    {"asterisk", 389},
    {"at", 975},
    {"atilde", 556},
    {"b", 611},
    {"backslash", 278},
    {"bar", 280},
    {"braceleft", 389},
    {"braceright", 389},
    {"bracketleft", 333},
    {"bracketright", 333},
    {"breve", 333},
    {"brokenbar", 280},
    {"bullet", 350},
    {"c", 556},
    {"caron", 333},
    {"ccedilla", 556},
    {"cedilla", 333},
    {"cent", 556},
    {"circumflex", 333},
    {"colon", 333},
    {"comma", 278},
    {"copyright", 737},
    {"currency", 556},
    {"d", 611},
    {"dagger", 556},
    {"daggerdbl", 556},
    {"degree", 400},
    {"dieresis", 333},
    {"divide", 584},
    {"dollar", 556},
    {"dotaccent", 333},
    {"dotlessi", 278},
    {"e", 556},
    {"eacute", 556},
    {"ecircumflex", 556},
    {"edieresis", 556},
    {"egrave", 556},
    {"eight", 556},
    {"ellipsis", 1000},
    {"emdash", 1000},
    {"endash", 556},
    {"equal", 584},
    {"eth", 611},
    {"exclam", 333},
    {"exclamdown", 333},
    {"f", 333},
    {"fi", 611},
    {"five", 556},
    {"fl", 611},
    {"florin", 556},
    {"four", 556},
    {"fraction", 167},
    {"g", 611},
    {"germandbls", 611},
    {"grave", 333},
    {"greater", 584},
    {"guillemotleft", 556},
    {"guillemotright", 556},
    {"guilsinglleft", 333},
    {"guilsinglright", 333},
    {"h", 611},
    {"hungarumlaut", 333},
    {"hyphen", 333},
    {"i", 278},
    {"iacute", 278},
    {"icircumflex", 278},
    {"idieresis", 278},
    {"igrave", 278},
    {"j", 278},
    {"k", 556},
    {"l", 278},
    {"less", 584},
    {"logicalnot", 584},
    {"lslash", 278},
    {"m", 889},
    {"macron", 333},
    {"minus", 584},
    {"mu", 611},
    {"multiply", 584},
    {"n", 611},
    {"nine", 556},
    {"ntilde", 611},
    {"numbersign", 556},
    {"o", 611},
    {"oacute", 611},
    {"ocircumflex", 611},
    {"odieresis", 611},
    {"oe", 944},
    {"ogonek", 333},
    {"ograve", 611},
    {"one", 556},
    {"onehalf", 834},
    {"onequarter", 834},
    {"onesuperior", 333},
    {"ordfeminine", 370},
    {"ordmasculine", 365},
    {"oslash", 611},
    {"otilde", 611},
    {"p", 611},
    {"paragraph", 556},
    {"parenleft", 333},
    {"parenright", 333},
    {"percent", 889},
    {"period", 278},
    {"periodcentered", 278},
    {"perthousand", 1000},
    {"plus", 584},
    {"plusminus", 584},
    {"q", 611},
    {"question", 611},
    {"questiondown", 611},
    {"quotedbl", 474},
    {"quotedblbase", 500},
    {"quotedblleft", 500},
    {"quotedblright", 500},
    {"quoteleft", 278},
    {"quoteright", 278},
    {"quotesinglbase", 278},
    {"quotesingle", 238},
    {"r", 389},
    {"registered", 737},
    {"ring", 333},
    {"s", 556},
    {"scaron", 556},
    {"section", 556},
    {"semicolon", 333},
    {"seven", 556},
    {"six", 556},
    {"slash", 278},
    {"space", 278},
    {"sterling", 556},
    {"t", 333},
    {"thorn", 611},
    {"three", 556},
    {"threequarters", 834},
    {"threesuperior", 333},
    {"tilde", 333},
    {"trademark", 1000},
    {"two", 556},
    {"twosuperior", 333},
    {"u", 611},
    {"uacute", 611},
    {"ucircumflex", 611},
    {"udieresis", 611},
    {"ugrave", 611},
    {"underscore", 556},
    {"v", 556},
    {"w", 778},
    {"x", 556},
    {"y", 556},
    {"yacute", 556},
    {"ydieresis", 556},
    {"yen", 556},
    {"z", 500},
    {"zcaron", 500},
    {"zero", 556},
};

static const GlyphWidth kWidths_Times_Roman[229] = {
    {"A", 722},
    {"AE", 889},
    {"Aacute", 722},
    {"Acircumflex", 722},
    {"Adieresis", 722},
    {"Agrave", 722},
    {"Aring", 722},
    {"Atilde", 722},
    {"B", 667},
    {"C", 667},
    {"Ccedilla", 667},
    {"D", 722},
    {"E", 611},
    {"Eacute", 611},
    {"Ecircumflex", 611},
    {"Edieresis", 611},
    {"Egrave", 611},
    {"Eth", 722},
    {"Euro", 500},
    {"F", 556},
    {"G", 722},
    {"H", 722},
    {"I", 333},
    {"Iacute", 333},
    {"Icircumflex", 333},
    {"Idieresis", 333},
    {"Igrave", 333},
    {"J", 389},
    {"K", 722},
    {"L", 611},
    {"Lslash", 611},
    {"M", 889},
    {"N", 722},
    {"Ntilde", 722},
    {"O", 722},
    {"OE", 889},
    {"Oacute", 722},
    {"Ocircumflex", 722},
    {"Odieresis", 722},
    {"Ograve", 722},
    {"Oslash", 722},
    {"Otilde", 722},
    {"P", 556},
    {"Q", 722},
    {"R", 667},
    {"S", 556},
    {"Scaron", 556},
    {"T", 611},
    {"Thorn", 556},
    {"U", 722},
    {"Uacute", 722},
    {"Ucircumflex", 722},
    {"Udieresis", 722},
    {"Ugrave", 722},
    {"V", 722},
    {"W", 944},
    {"X", 722},
    {"Y", 722},
    {"Yacute", 722},
    {"Ydieresis", 722},
    {"Z", 611},
    {"Zcaron", 611},
    {"a", 444},
    {"aacute", 444},
    {"acircumflex", 444},
    {"acute", 333},
    {"adieresis", 444},
    {"ae", 667},
    {"agrave", 444},
    {"ampersand", 778},
    {"aring", 444},
    {"asciicircum", 469},
    {"asciitilde", 541},
    {"asterisk", 500},
    {"at", 921},
    {"atilde", 444},
    {"b", 500},
    {"backslash", 278},
    {"bar", 200},
    {"braceleft", 480},
    {"braceright", 480},
    {"bracketleft", 333},
    {"bracketright", 333},
    {"breve", 333},
    {"brokenbar", 200},
    {"bullet", 350},
    {"c", 444},
    {"caron", 333},
    {"ccedilla", 444},
    {"cedilla", 333},
    {"cent", 500},
    {"circumflex", 333},
    {"colon", 278},
    {"comma", 250},
    {"copyright", 760},
    {"currency", 500},
    {"d", 500},
    {"dagger", 500},
    {"daggerdbl", 500},
    {"degree", 400},
    {"dieresis", 333},
    {"divide", 564},
    {"dollar", 500},
    {"dotaccent", 333},
    {"dotlessi", 278},
    {"e", 444},
    {"eacute", 444},
    {"ecircumflex", 444},
    {"edieresis", 444},
    {"egrave", 444},
    {"eight", 500},
    {"ellipsis", 1000},
    {"emdash", 1000},
    {"endash", 500},
    {"equal", 564},
    {"eth", 500},
    {"exclam", 333},
    {"exclamdown", 333},
    {"f", 333},
    {"fi", 556},
    {"five", 500},
    {"fl", 556},
    {"florin", 500},
    {"four", 500},
    {"fraction", 167},
    {"g", 500},
    {"germandbls", 500},
    {"grave", 333},
    {"greater", 564},
    {"guillemotleft", 500},
    {"guillemotright", 500},
    {"guilsinglleft", 333},
    {"guilsinglright", 333},
    {"h", 500},
    {"hungarumlaut", 333},
    {"hyphen", 333},
    {"i", 278},
    {"iacute", 278},
    {"icircumflex", 278},
    {"idieresis", 278},
    {"igrave", 278},
    {"j", 278},
    {"k", 500},
    {"l", 278},
    {"less", 564},
    {"logicalnot", 564},
    {"lslash", 278},
    {"m", 778},
    {"macron", 333},
    {"minus", 564},
    {"mu", 500},
    {"multiply", 564},
    {"n", 500},
    {"nine", 500},
    {"ntilde", 500},
    {"numbersign", 500},
    {"o", 500},
    {"oacute", 500},
    {"ocircumflex", 500},
    {"odieresis", 500},
    {"oe", 722},
    {"ogonek", 333},
    {"ograve", 500},
    {"one", 500},
    {"onehalf", 750},
    {"onequarter", 750},
    {"onesuperior", 300},
    {"ordfeminine", 276},
    {"ordmasculine", 310},
    {"oslash", 500},
    {"otilde", 500},
    {"p", 500},
    {"paragraph", 453},
    {"parenleft", 333},
    {"parenright", 333},
    {"percent", 833},
    {"period", 250},
    {"periodcentered", 250},
    {"perthousand", 1000},
    {"plus", 564},
    {"plusminus", 564},
    {"q", 500},
    {"question", 444},
    {"questiondown", 444},
    {"quotedbl", 408},
    {"quotedblbase", 444},
    {"quotedblleft", 444},
    {"quotedblright", 444},
    {"quoteleft", 333},
    {"quoteright", 333},
    {"quotesinglbase", 333},
    {"quotesingle", 180},
    {"r", 333},
    {"registered", 760},
    {"ring", 333},
    {"s", 389},
    {"scaron", 389},
    {"section", 500},
    {"semicolon", 278},
    {"seven", 500},
    {"six", 500},
    {"slash", 278},
    {"space", 250},
    {"sterling", 500},
    {"t", 278},
    {"thorn", 500},
    {"three", 500},
    {"threequarters", 750},
    {"threesuperior", 300},
    {"tilde", 333},
    {"trademark", 980},
    {"two", 500},
    {"twosuperior", 300},
    {"u", 500},
    {"uacute", 500},
    {"ucircumflex", 500},
    {"udieresis", 500},
    {"ugrave", 500},
    {"underscore", 500},
    {"v", 500},
    {"w", 722},
    {"x", 500},
    {"y", 500},
    {"yacute", 500},
    {"ydieresis", 500},
    {"yen", 500},
    {"z", 444},
    {"zcaron", 444},
    {"zero", 500},
};

static const GlyphWidth kWidths_Times_Bold[229] = {
    {"A", 722},
    {"AE", 1000},
    {"Aacute", 722},
    {"Acircumflex", 722},
    {"Adieresis", 722},
    {"Agrave", 722},
    {"Aring", 722},
    {"Atilde", 722},
    {"B", 667},
    {"C", 722},
    {"Ccedilla", 722},
    {"D", 722},
    {"E", 667},
    {"Eacute", 667},
    {"Ecircumflex", 667},
    {"Edieresis", 667},
    {"Egrave", 667},
    {"Eth", 722},
    {"Euro", 500},
    {"F", 611},
    {"G", 778},
    {"H", 778},
    {"I", 389},
    {"Iacute", 389},
    {"Icircumflex", 389},
    {"Idieresis", 389},
    {"Igrave", 389},
    {"J", 500},
    {"K", 778},
    {"L", 667},
    {"Lslash", 667},
    {"M", 944},
    {"N", 722},
    {"Ntilde", 722},
    {"O", 778},
    {"OE", 1000},
    {"Oacute", 778},
    {"Ocircumflex", 778},
    {"Odieresis", 778},
    {"Ograve", 778},
    {"Oslash", 778},
    {"Otilde", 778},
    {"P", 611},
    {"Q", 778},
    {"R", 722},
    {"S", 556},
    {"Scaron", 556},
    {"T", 667},
    {"Thorn", 611},
    {"U", 722},
    {"Uacute", 722},
    {"Ucircumflex", 722},
    {"Udieresis", 722},
    {"Ugrave", 722},
    {"V", 722},
    {"W", 1000},
    {"X", 722},
    {"Y", 722},
    {"Yacute", 722},
    {"Ydieresis", 722},
    {"Z", 667},
    {"Zcaron", 667},
    {"a", 500},
    {"aacute", 500},
    {"acircumflex", 500},
    {"acute", 333},
    {"adieresis", 500},
    {"ae", 722},
    {"agrave", 500},
    {"ampersand", 833},
    {"aring", 500},
    {"asciicircum", 581},
    {"asciitilde", 520},
    {"asterisk", 500},
    {"at", 930},
    {"atilde", 500},
    {"b", 556},
    {"backslash", 278},
    {"bar", 220},
    {"braceleft", 394},
    {"braceright", 394},
    {"bracketleft", 333},
    {"bracketright", 333},
    {"breve", 333},
    {"brokenbar", 220},
    {"bullet", 350},
    {"c", 444},
    {"caron", 333},
    {"ccedilla", 444},
    {"cedilla", 333},
    {"cent", 500},
    {"circumflex", 333},
    {"colon", 333},
    {"comma", 250},
    {"copyright", 747},
    {"currency", 500},
    {"d", 556},
    {"dagger", 500},
    {"daggerdbl", 500},
    {"degree", 400},
    {"dieresis", 333},
    {"divide", 570},
    {"dollar", 500},
    {"dotaccent", 333},
    {"dotlessi", 278},
    {"e", 444},
    {"eacute", 444},
    {"ecircumflex", 444},
    {"edieresis", 444},
    {"egrave", 444},
    {"eight", 500},
    {"ellipsis", 1000},
    {"emdash", 1000},
    {"endash", 500},
    {"equal", 570},
    {"eth", 500},
    {"exclam", 333},
    {"exclamdown", 333},
    {"f", 333},
    {"fi", 556},
    {"five", 500},
    {"fl", 556},
    {"florin", 500},
    {"four", 500},
    {"fraction", 167},
    {"g", 500},
    {"germandbls", 556},
    {"grave", 333},
    {"greater", 570},
    {"guillemotleft", 500},
    {"guillemotright", 500},
    {"guilsinglleft", 333},
    {"guilsinglright", 333},
    {"h", 556},
    {"hungarumlaut", 333},
    {"hyphen", 333},
    {"i", 278},
    {"iacute", 278},
    {"icircumflex", 278},
    {"idieresis", 278},
    {"igrave", 278},
    {"j", 333},
    {"k", 556},
    {"l", 278},
    {"less", 570},
    {"logicalnot", 570},
    {"lslash", 278},
    {"m", 833},
    {"macron", 333},
    {"minus", 570},
    {"mu", 556},
    {"multiply", 570},
    {"n", 556},
    {"nine", 500},
    {"ntilde", 556},
    {"numbersign", 500},
    {"o", 500},
    {"oacute", 500},
    {"ocircumflex", 500},
    {"odieresis", 500},
    {"oe", 722},
    {"ogonek", 333},
    {"ograve", 500},
    {"one", 500},
    {"onehalf", 750},
    {"onequarter", 750},
    {"onesuperior", 300},
    {"ordfeminine", 300},
    {"ordmasculine", 330},
    {"oslash", 500},
    {"otilde", 500},
    {"p", 556},
    {"paragraph", 540},
    {"parenleft", 333},
    {"parenright", 333},
    {"percent", 1000},
    {"period", 250},
    {"periodcentered", 250},
    {"perthousand", 1000},
    {"plus", 570},
    {"plusminus", 570},
    {"q", 556},
    {"question", 500},
    {"questiondown", 500},
    {"quotedbl", 555},
    {"quotedblbase", 500},
    {"quotedblleft", 500},
    {"quotedblright", 500},
    {"quoteleft", 333},
    {"quoteright", 333},
    {"quotesinglbase", 333},
    {"quotesingle", 278},
    {"r", 444},
    {"registered", 747},
    {"ring", 333},
    {"s", 389},
    {"scaron", 389},
    {"section", 500},
    {"semicolon", 333},
    {"seven", 500},
    {"six", 500},
    {"slash", 278},
    {"space", 250},
    {"sterling", 500},
    {"t", 333},
    {"thorn", 556},
    {"three", 500},
    {"threequarters", 750},
    {"threesuperior", 300},
    {"tilde", 333},
    {"trademark", 1000},
    {"two", 500},
    {"twosuperior", 300},
    {"u", 556},
    {"uacute", 556},
    {"ucircumflex", 556},
    {"udieresis", 556},
    {"ugrave", 556},
    {"underscore", 500},
    {"v", 500},
    {"w", 722},
    {"x", 500},
    {"y", 500},
    {"yacute", 500},
    {"ydieresis", 500},
    {"yen", 500},
    {"z", 444},
    {"zcaron", 444},
    {"zero", 500},
};

static const GlyphWidth kWidths_Times_Italic[229] = {
    {"A", 611},
    {"AE", 889},
    {"Aacute", 611},
    {"Acircumflex", 611},
    {"Adieresis", 611},
    {"Agrave", 611},
    {"Aring", 611},
    {"Atilde", 611},
    {"B", 611},
    {"C", 667},
    {"Ccedilla", 667},
    {"D", 722},
    {"E", 611},
    {"Eacute", 611},
    {"Ecircumflex", 611},
    {"Edieresis", 611},
    {"Egrave", 611},
    {"Eth", 722},
    {"Euro", 500},
    {"F", 611},
    {"G", 722},
    {"H", 722},
    {"I", 333},
    {"Iacute", 333},
    {"Icircumflex", 333},
    {"Idieresis", 333},
    {"Igrave", 333},
    {"J", 444},
    {"K", 667},
    {"L", 556},
    {"Lslash", 556},
    {"M", 833},
    {"N", 667},
    {"Ntilde", 667},
    {"O", 722},
    {"OE", 944},
    {"Oacute", 722},
    {"Ocircumflex", 722},
    {"Odieresis", 722},
    {"Ograve", 722},
    {"Oslash", 722},
    {"Otilde", 722},
    {"P", 611},
    {"Q", 722},
    {"R", 611},
    {"S", 500},
    {"Scaron", 500},
    {"T", 556},
    {"Thorn", 611},
    {"U", 722},
    {"Uacute", 722},
    {"Ucircumflex", 722},
    {"Udieresis", 722},
    {"Ugrave", 722},
    {"V", 611},
    {"W", 833},
    {"X", 611},
    {"Y", 556},
    {"Yacute", 556},
    {"Ydieresis", 556},
    {"Z", 556},
    {"Zcaron", 556},
    {"a", 500},
    {"aacute", 500},
    {"acircumflex", 500},
    {"acute", 333},
    {"adieresis", 500},
    {"ae", 667},
    {"agrave", 500},
    {"ampersand", 778},
    {"aring", 500},
    {"asciicircum", 422},
    {"asciitilde", 541},
    {"asterisk", 500},
    {"at", 920},
    {"atilde", 500},
    {"b", 500},
    {"backslash", 278},
    {"bar", 275},
    {"braceleft", 400},
    {"braceright", 400},
    {"bracketleft", 389},
    {"bracketright", 389},
    {"breve", 333},
    {"brokenbar", 275},
    {"bullet", 350},
    {"c", 444},
    {"caron", 333},
    {"ccedilla", 444},
    {"cedilla", 333},
    {"cent", 500},
    {"circumflex", 333},
    {"colon", 333},
    {"comma", 250},
    {"copyright", 760},
    {"currency", 500},
    {"d", 500},
    {"dagger", 500},
    {"daggerdbl", 500},
    {"degree", 400},
    {"dieresis", 333},
    {"divide", 675},
    {"dollar", 500},
    {"dotaccent", 333},
    {"dotlessi", 278},
    {"e", 444},
    {"eacute", 444},
    {"ecircumflex", 444},
    {"edieresis", 444},
    {"egrave", 444},
    {"eight", 500},
    {"ellipsis", 889},
    {"emdash", 889},
    {"endash", 500},
    {"equal", 675},
    {"eth", 500},
    {"exclam", 333},
    {"exclamdown", 389},
    {"f", 278},
    {"fi", 500},
    {"five", 500},
    {"fl", 500},
    {"florin", 500},
    {"four", 500},
    {"fraction", 167},
    {"g", 500},
    {"germandbls", 500},
    {"grave", 333},
    {"greater", 675},
    {"guillemotleft", 500},
    {"guillemotright", 500},
    {"guilsinglleft", 333},
    {"guilsinglright", 333},
    {"h", 500},
    {"hungarumlaut", 333},
    {"hyphen", 333},
    {"i", 278},
    {"iacute", 278},
    {"icircumflex", 278},
    {"idieresis", 278},
    {"igrave", 278},
    {"j", 278},
    {"k", 444},
    {"l", 278},
    {"less", 675},
    {"logicalnot", 675},
    {"lslash", 278},
    {"m", 722},
    {"macron", 333},
    {"minus", 675},
    {"mu", 500},
    {"multiply", 675},
    {"n", 500},
    {"nine", 500},
    {"ntilde", 500},
    {"numbersign", 500},
    {"o", 500},
    {"oacute", 500},
    {"ocircumflex", 500},
    {"odieresis", 500},
    {"oe", 667},
    {"ogonek", 333},
    {"ograve", 500},
    {"one", 500},
    {"onehalf", 750},
    {"onequarter", 750},
    {"onesuperior", 300},
    {"ordfeminine", 276},
    {"ordmasculine", 310},
    {"oslash", 500},
    {"otilde", 500},
    {"p", 500},
    {"paragraph", 523},
    {"parenleft", 333},
    {"parenright", 333},
    {"percent", 833},
    {"period", 250},
    {"periodcentered", 250},
    {"perthousand", 1000},
    {"plus", 675},
    {"plusminus", 675},
    {"q", 500},
    {"question", 500},
    {"questiondown", 500},
    {"quotedbl", 420},
    {"quotedblbase", 556},
    {"quotedblleft", 556},
    {"quotedblright", 556},
    {"quoteleft", 333},
    {"quoteright", 333},
    {"quotesinglbase", 333},
    {"quotesingle", 214},
    {"r", 389},
    {"registered", 760},
    {"ring", 333},
    {"s", 389},
    {"scaron", 389},
    {"section", 500},
    {"semicolon", 333},
    {"seven", 500},
    {"six", 500},
    {"slash", 278},
    {"space", 250},
    {"sterling", 500},
    {"t", 278},
    {"thorn", 500},
    {"three", 500},
    {"threequarters", 750},
    {"threesuperior", 300},
    {"tilde", 333},
    {"trademark", 980},
    {"two", 500},
    {"twosuperior", 300},
    {"u", 500},
    {"uacute", 500},
    {"ucircumflex", 500},
    {"udieresis", 500},
    {"ugrave", 500},
    {"underscore", 500},
    {"v", 444},
    {"w", 667},
    {"x", 444},
    {"y", 444},
    {"yacute", 444},
    {"ydieresis", 444},
    {"yen", 500},
    {"z", 389},
    {"zcaron", 389},
    {"zero", 500},
};

static const GlyphWidth kWidths_Times_BoldItalic[229] = {
    {"A", 667},
    {"AE", 944},
    {"Aacute", 667},
    {"Acircumflex", 667},
    {"Adieresis", 667},
    {"Agrave", 667},
    {"Aring", 667},
    {"Atilde", 667},
    {"B", 667},
    {"C", 667},
    {"Ccedilla", 667},
    {"D", 722},
    {"E", 667},
    {"Eacute", 667},
    {"Ecircumflex", 667},
    {"Edieresis", 667},
    {"Egrave", 667},
    {"Eth", 722},
    {"Euro", 500},
    {"F", 667},
    {"G", 722},
    {"H", 778},
    {"I", 389},
    {"Iacute", 389},
    {"Icircumflex", 389},
    {"Idieresis", 389},
    {"Igrave", 389},
    {"J", 500},
    {"K", 667},
    {"L", 611},
    {"Lslash", 611},
    {"M", 889},
    {"N", 722},
    {"Ntilde", 722},
    {"O", 722},
    {"OE", 944},
    {"Oacute", 722},
    {"Ocircumflex", 722},
    {"Odieresis", 722},
    {"Ograve", 722},
    {"Oslash", 722},
    {"Otilde", 722},
    {"P", 611},
    {"Q", 722},
    {"R", 667},
    {"S", 556},
    {"Scaron", 556},
    {"T", 611},
    {"Thorn", 611},
    {"U", 722},
    {"Uacute", 722},
    {"Ucircumflex", 722},
    {"Udieresis", 722},
    {"Ugrave", 722},
    {"V", 667},
    {"W", 889},
    {"X", 667},
    {"Y", 611},
    {"Yacute", 611},
    {"Ydieresis", 611},
    {"Z", 611},
    {"Zcaron", 611},
    {"a", 500},
    {"aacute", 500},
    {"acircumflex", 500},
    {"acute", 333},
    {"adieresis", 500},
    {"ae", 722},
    {"agrave", 500},
    {"ampersand", 778},
    {"aring", 500},
    {"asciicircum", 570},
    {"asciitilde", 570},
    {"asterisk", 500},
    {"at", 832},
    {"atilde", 500},
    {"b", 500},
    {"backslash", 278},
    {"bar", 220},
    {"braceleft", 348},
    {"braceright", 348},
    {"bracketleft", 333},
    {"bracketright", 333},
    {"breve", 333},
    {"brokenbar", 220},
    {"bullet", 350},
    {"c", 444},
    {"caron", 333},
    {"ccedilla", 444},
    {"cedilla", 333},
    {"cent", 500},
    {"circumflex", 333},
    {"colon", 333},
    {"comma", 250},
    {"copyright", 747},
    {"currency", 500},
    {"d", 500},
    {"dagger", 500},
    {"daggerdbl", 500},
    {"degree", 400},
    {"dieresis", 333},
    {"divide", 570},
    {"dollar", 500},
    {"dotaccent", 333},
    {"dotlessi", 278},
    {"e", 444},
    {"eacute", 444},
    {"ecircumflex", 444},
    {"edieresis", 444},
    {"egrave", 444},
    {"eight", 500},
    {"ellipsis", 1000},
    {"emdash", 1000},
    {"endash", 500},
    {"equal", 570},
    {"eth", 500},
    {"exclam", 389},
    {"exclamdown", 389},
    {"f", 333},
    {"fi", 556},
    {"five", 500},
    {"fl", 556},
    {"florin", 500},
    {"four", 500},
    {"fraction", 167},
    {"g", 500},
    {"germandbls", 500},
    {"grave", 333},
    {"greater", 570},
    {"guillemotleft", 500},
    {"guillemotright", 500},
    {"guilsinglleft", 333},
    {"guilsinglright", 333},
    {"h", 556},
    {"hungarumlaut", 333},
    {"hyphen", 333},
    {"i", 278},
    {"iacute", 278},
    {"icircumflex", 278},
    {"idieresis", 278},
    {"igrave", 278},
    {"j", 278},
    {"k", 500},
    {"l", 278},
    {"less", 570},
    {"logicalnot", 606},
    {"lslash", 278},
    {"m", 778},
    {"macron", 333},
    {"minus", 606},
    {"mu", 576},
    {"multiply", 570},
    {"n", 556},
    {"nine", 500},
    {"ntilde", 556},
    {"numbersign", 500},
    {"o", 500},
    {"oacute", 500},
    {"ocircumflex", 500},
    {"odieresis", 500},
    {"oe", 722},
    {"ogonek", 333},
    {"ograve", 500},
    {"one", 500},
    {"onehalf", 750},
    {"onequarter", 750},
    {"onesuperior", 300},
    {"ordfeminine", 266},
    {"ordmasculine", 300},
    {"oslash", 500},
    {"otilde", 500},
    {"p", 500},
    {"paragraph", 500},
    {"parenleft", 333},
    {"parenright", 333},
    {"percent", 833},
    {"period", 250},
    {"periodcentered", 250},
    {"perthousand", 1000},
    {"plus", 570},
    {"plusminus", 570},
    {"q", 500},
    {"question", 500},
    {"questiondown", 500},
    {"quotedbl", 555},
    {"quotedblbase", 500},
    {"quotedblleft", 500},
    {"quotedblright", 500},
    {"quoteleft", 333},
    {"quoteright", 333},
    {"quotesinglbase", 333},
    {"quotesingle", 278},
    {"r", 389},
    {"registered", 747},
    {"ring", 333},
    {"s", 389},
    {"scaron", 389},
    {"section", 500},
    {"semicolon", 333},
    {"seven", 500},
    {"six", 500},
    {"slash", 278},
    {"space", 250},
    {"sterling", 500},
    {"t", 278},
    {"thorn", 500},
    {"three", 500},
    {"threequarters", 750},
    {"threesuperior", 300},
    {"tilde", 333},
    {"trademark", 1000},
    {"two", 500},
    {"twosuperior", 300},
    {"u", 556},
    {"uacute", 556},
    {"ucircumflex", 556},
    {"udieresis", 556},
    {"ugrave", 556},
    {"underscore", 500},
    {"v", 444},
    {"w", 667},
    {"x", 500},
    {"y", 444},
    {"yacute", 444},
    {"ydieresis", 444},
    {"yen", 500},
    {"z", 389},
    {"zcaron", 389},
    {"zero", 500},
};

static const GlyphWidth kWidths_Symbol[190] = {
    {"Alpha", 722},
    {"Beta", 667},
    {"Chi", 722},
    {"Delta", 612},
    {"Epsilon", 611},
    {"Eta", 722},
    {"Euro", 750},
    {"Gamma", 603},
    {"Ifraktur", 686},
    {"Iota", 333},
    {"Kappa", 722},
    {"Lambda", 686},
    {"Mu", 889},
    {"Nu", 722},
    {"Omega", 768},
    {"Omicron", 722},
    {"Phi", 763},
    {"Pi", 768},
    {"Psi", 795},
    {"Rfraktur", 795},
    {"Rho", 556},
    {"Sigma", 592},
    {"Tau", 611},
    {"Theta", 741},
    {"Upsilon", 690},
    {"Upsilon1", 620},
    {"Xi", 645},
    {"Zeta", 611},
    {"aleph", 823},
    {"alpha", 631},
    {"ampersand", 778},
    {"angle", 768},
    {"angleleft", 329},
    {"angleright", 329},
    {"apple", 790},
    {"approxequal", 549},
    {"arrowboth", 1042},
    {"arrowdblboth", 1042},
    {"arrowdbldown", 603},
    {"arrowdblleft", 987},
    {"arrowdblright", 987},
    {"arrowdblup", 603},
    {"arrowdown", 603},
    {"arrowhorizex", 1000},
    {"arrowleft", 987},
    {"arrowright", 987},
    {"arrowup", 603},
    {"arrowvertex", 603},
    {"asteriskmath", 500},
    {"bar", 200},
    {"beta", 549},
    {"braceex", 494},
    {"braceleft", 480},
    {"braceleftbt", 494},
    {"braceleftmid", 494},
    {"bracelefttp", 494},
    {"braceright", 480},
    {"bracerightbt", 494},
    {"bracerightmid", 494},
    {"bracerighttp", 494},
    {"bracketleft", 333},
    {"bracketleftbt", 384},
    {"bracketleftex", 384},
    {"bracketlefttp", 384},
    {"bracketright", 333},
    {"bracketrightbt", 384},
    {"bracketrightex", 384},
    {"bracketrighttp", 384},
    {"bullet", 460},
    {"carriagereturn", 658},
    {"chi", 549},
    {"circlemultiply", 768},
    {"circleplus", 768},
    {"club", 753},
    {"colon", 278},
    {"comma", 250},
    {"congruent", 549},
    {"copyrightsans", 790},
    {"copyrightserif", 790},
    {"degree", 400},
    {"delta", 494},
    {"diamond", 753},
    {"divide", 549},
    {"dotmath", 250},
    {"eight", 500},
    {"element", 713},
    {"ellipsis", 1000},
    {"emptyset", 823},
    {"epsilon", 439},
    {"equal", 549},
    {"equivalence", 549},
    {"eta", 603},
    {"exclam", 333},
    {"existential", 549},
    {"five", 500},
    {"florin", 500},
    {"four", 500},
    {"fraction", 167},
    {"gamma", 411},
    {"gradient", 713},
    {"greater", 549},
    {"greaterequal", 549},
    {"heart", 753},
    {"infinity", 713},
    {"integral", 274},
    {"integralbt", 686},
    {"integralex", 686},
    {"integraltp", 686},
    {"intersection", 768},
    {"iota", 329},
    {"kappa", 549},
    {"lambda", 549},
    {"less", 549},
    {"lessequal", 549},
    {"logicaland", 603},
    {"logicalnot", 713},
    {"logicalor", 603},
    {"lozenge", 494},
    {"minus", 549},
    {"minute", 247},
    {"mu", 576},
    {"multiply", 549},
    {"nine", 500},
    {"notelement", 713},
    {"notequal", 549},
    {"notsubset", 713},
    {"nu", 521},
    {"numbersign", 500},
    {"omega", 686},
    {"omega1", 713},
    {"omicron", 549},
    {"one", 500},
    {"parenleft", 333},
    {"parenleftbt", 384},
    {"parenleftex", 384},
    {"parenlefttp", 384},
    {"parenright", 333},
    {"parenrightbt", 384},
    {"parenrightex", 384},
    {"parenrighttp", 384},
    {"partialdiff", 494},
    {"percent", 833},
    {"period", 250},
    {"perpendicular", 658},
    {"phi", 521},
    {"phi1", 603},
    {"pi", 549},
    {"plus", 549},
    {"plusminus", 549},
    {"product", 823},
    {"propersubset", 713},
    {"propersuperset", 713},
    {"proportional", 713},
    {"psi", 686},
    {"question", 444},
    {"radical", 549},
    {"radicalex", 500},
    {"reflexsubset", 713},
    {"reflexsuperset", 713},
    {"registersans", 790},
    {"registerserif", 790},
    {"rho", 549},
    {"second", 411},
    {"semicolon", 278},
    {"seven", 500},
    {"sigma", 603},
    {"sigma1", 439},
    {"similar", 549},
    {"six", 500},
    {"slash", 278},
    {"space", 250},
    {"spade", 753},
    {"suchthat", 439},
    {"summation", 713},
    {"tau", 439},
    {"therefore", 863},
    {"theta", 521},
    {"theta1", 631},
    {"three", 500},
    {"trademarksans", 786},
    {"trademarkserif", 890},
    {"two", 500},
    {"underscore", 500},
    {"union", 768},
    {"universal", 713},
    {"upsilon", 576},
    {"weierstrass", 987},
    {"xi", 493},
    {"zero", 500},
    {"zeta", 494},
};

static const GlyphWidth kWidths_ZapfDingbats[202] = {
    {"a1", 974},
    {"a10", 692},
    {"a100", 668},
    {"a101", 732},
    {"a102", 544},
    {"a103", 544},
    {"a104", 910},
    {"a105", 911},
    {"a106", 667},
    {"a107", 760},
    {"a108", 760},
    {"a109", 626},
    {"a11", 960},
    {"a110", 694},
    {"a111", 595},
    {"a112", 776},
    {"a117", 690},
    {"a118", 791},
    {"a119", 790},
    {"a12", 939},
    {"a120", 788},
    {"a121", 788},
    {"a122", 788},
    {"a123", 788},
    {"a124", 788},
    {"a125", 788},
    {"a126", 788},
    {"a127", 788},
    {"a128", 788},
    {"a129", 788},
    {"a13", 549},
    {"a130", 788},
    {"a131", 788},
    {"a132", 788},
    {"a133", 788},
    {"a134", 788},
    {"a135", 788},
    {"a136", 788},
    {"a137", 788},
    {"a138", 788},
    {"a139", 788},
    {"a14", 855},
    {"a140", 788},
    {"a141", 788},
    {"a142", 788},
    {"a143", 788},
    {"a144", 788},
    {"a145", 788},
    {"a146", 788},
    {"a147", 788},
    {"a148", 788},
    {"a149", 788},
    {"a15", 911},
    {"a150", 788},
    {"a151", 788},
    {"a152", 788},
    {"a153", 788},
    {"a154", 788},
    {"a155", 788},
    {"a156", 788},
    {"a157", 788},
    {"a158", 788},
    {"a159", 788},
    {"a16", 933},
    {"a160", 894},
    {"a161", 838},
    {"a162", 924},
    {"a163", 1016},
    {"a164", 458},
    {"a165", 924},
    {"a166", 918},
    {"a167", 927},
    {"a168", 928},
    {"a169", 928},
    {"a17", 945},
    {"a170", 834},
    {"a171", 873},
    {"a172", 828},
    {"a173", 924},
    {"a174", 917},
    {"a175", 930},
    {"a176", 931},
    {"a177", 463},
    {"a178", 883},
    {"a179", 836},
    {"a18", 974},
    {"a180", 867},
    {"a181", 696},
    {"a182", 874},
    {"a183", 760},
    {"a184", 946},
    {"a185", 865},
    {"a186", 967},
    {"a187", 831},
    {"a188", 873},
    {"a189", 927},
    {"a19", 755},
    {"a190", 970},
    {"a191", 918},
    {"a192", 748},
    {"a193", 836},
    {"a194", 771},
    {"a195", 888},
    {"a196", 748},
    {"a197", 771},
    {"a198", 888},
    {"a199", 867},
    {"a2", 961},
    {"a20", 846},
    {"a200", 696},
    {"a201", 874},
    {"a202", 974},
    {"a203", 762},
    {"a204", 759},
    {"a205", 509},
    {"a206", 410},
    {"a21", 762},
    {"a22", 761},
    {"a23", 571},
    {"a24", 677},
    {"a25", 763},
    {"a26", 760},
    {"a27", 759},
    {"a28", 754},
    {"a29", 786},
    {"a3", 980},
    {"a30", 788},
    {"a31", 788},
    {"a32", 790},
    {"a33", 793},
    {"a34", 794},
    {"a35", 816},
    {"a36", 823},
    {"a37", 789},
    {"a38", 841},
    {"a39", 823},
    {"a4", 719},
    {"a40", 833},
    {"a41", 816},
    {"a42", 831},
    {"a43", 923},
    {"a44", 744},
    {"a45", 723},
    {"a46", 749},
    {"a47", 790},
    {"a48", 792},
    {"a49", 695},
    {"a5", 789},
    {"a50", 776},
    {"a51", 768},
    {"a52", 792},
    {"a53", 759},
    {"a54", 707},
    {"a55", 708},
    {"a56", 682},
    {"a57", 701},
    {"a58", 826},
    {"a59", 815},
    {"a6", 494},
    {"a60", 789},
    {"a61", 789},
    {"a62", 707},
    {"a63", 687},
    {"a64", 696},
    {"a65", 689},
    {"a66", 786},
    {"a67", 787},
    {"a68", 713},
    {"a69", 791},
    {"a7", 552},
    {"a70", 785},
    {"a71", 791},
    {"a72", 873},
    {"a73", 761},
    {"a74", 762},
    {"a75", 759},
    {"a76", 892},
    {"a77", 892},
    {"a78", 788},
    {"a79", 784},
    {"a8", 537},
    {"a81", 438},
    {"a82", 138},
    {"a83", 277},
    {"a84", 415},
    {"a85", 509},
    {"a86", 410},
    {"a87", 234},
    {"a88", 234},
    {"a89", 390},
    {"a9", 577},
    {"a90", 390},
    {"a91", 276},
    {"a92", 276},
    {"a93", 317},
    {"a94", 317},
    {"a95", 334},
    {"a96", 334},
    {"a97", 392},
    {"a98", 392},
    {"a99", 668},
    {"space", 278},
};

const StandardFontMetrics kStandardFonts[14] = {
    {"Courier", 629, -157, kStandard, kWidths_Courier, 229},
    {"Courier-Bold", 626, -142, kStandard, kWidths_Courier_Bold, 229},
    {"Courier-Oblique", 629, -157, kStandard, kWidths_Courier_Oblique, 229},
    {"Courier-BoldOblique", 626, -142, kStandard, kWidths_Courier_BoldOblique, 229},
    {"Helvetica", 718, -207, kStandard, kWidths_Helvetica, 229},
    {"Helvetica-Bold", 718, -207, kStandard, kWidths_Helvetica_Bold, 229},
    {"Helvetica-Oblique", 718, -207, kStandard, kWidths_Helvetica_Oblique, 229},
    {"Helvetica-BoldOblique", 718, -207, kStandard, kWidths_Helvetica_BoldOblique, 229},
    {"Times-Roman", 683, -217, kStandard, kWidths_Times_Roman, 229},
    {"Times-Bold", 676, -205, kStandard, kWidths_Times_Bold, 229},
    {"Times-Italic", 683, -205, kStandard, kWidths_Times_Italic, 229},
    {"Times-BoldItalic", 699, -205, kStandard, kWidths_Times_BoldItalic, 229},
    {"Symbol", 0, 0, kSymbol, kWidths_Symbol, 190},
    {"ZapfDingbats", 0, 0, kZapfDingbats, kWidths_ZapfDingbats, 202},
};

}  // namespace docanno::pdf::data
