"""HTML script extraction: blocks, handlers, URLs, offset fidelity."""
from jssec.html_extract import extract_scripts_from_html
from jssec.source import UnitKind

PAGE = """<!DOCTYPE html>
<html>
<head>
  <script>var a = 1;</script>
  <script type="module">import x from "./m.js";</script>
  <script src="vendor/lib.js"></script>
  <script type="application/json">{"not": "js"}</script>
</head>
<body>
  <button onclick="doThing();">Go</button>
  <a href="javascript:void(0)">link</a>
  <!-- <script>var commented = 1;</script> -->
  <img src=banner.png onload='track()'>
</body>
</html>
"""


def test_script_blocks_extracted():
    out = extract_scripts_from_html("page.html", PAGE)
    blocks = [u for u in out.units if u.kind == UnitKind.HTML_SCRIPT_BLOCK]
    assert [u.text for u in blocks] == ["var a = 1;", 'import x from "./m.js";']
    assert [u.unit_id for u in blocks] == ["page.html#script1", "page.html#script2"]
    assert blocks[0].source_type == "script"
    assert blocks[1].source_type == "module"


def test_block_offsets_match_file():
    out = extract_scripts_from_html("page.html", PAGE)
    for unit in out.units:
        assert PAGE[unit.base_offset:unit.base_offset + len(unit.text)] == unit.text


def test_inline_handlers_extracted():
    out = extract_scripts_from_html("page.html", PAGE)
    handlers = [u for u in out.units if u.kind == UnitKind.HTML_INLINE_HANDLER]
    assert [u.text for u in handlers] == ["doThing();", "track()"]
    assert handlers[0].html_context == ("button", "onclick")
    assert handlers[1].html_context == ("img", "onload")
    assert handlers[0].unit_id == "page.html#handler1"


def test_external_script_recorded_not_extracted():
    out = extract_scripts_from_html("page.html", PAGE)
    assert len(out.external_scripts) == 1
    assert out.external_scripts[0].src == "vendor/lib.js"
    assert "vendor/lib.js" not in [u.text for u in out.units]


def test_non_js_mime_skipped():
    out = extract_scripts_from_html("page.html", PAGE)
    assert all('"not"' not in u.text for u in out.units)


def test_javascript_url_attribute():
    out = extract_scripts_from_html("page.html", PAGE)
    assert len(out.js_urls) == 1
    url = out.js_urls[0]
    assert (url.tag, url.attr) == ("a", "href")
    assert PAGE[url.span.start:url.span.end] == "javascript:void(0)"


def test_commented_out_script_ignored():
    out = extract_scripts_from_html("page.html", PAGE)
    assert all("commented" not in u.text for u in out.units)


def test_handler_span_line_numbers():
    out = extract_scripts_from_html("page.html", PAGE)
    handler = next(u for u in out.units if u.kind == UnitKind.HTML_INLINE_HANDLER)
    span = handler.span(0, len(handler.text))
    line = PAGE.splitlines()[span.start_line - 1]
    assert "doThing" in line


def test_unclosed_script_runs_to_eof():
    text = "<body><script>var tail = 1;"
    out = extract_scripts_from_html("p.html", text)
    assert [u.text for u in out.units] == ["var tail = 1;"]


def test_case_insensitive_tags_and_attrs():
    text = '<SCRIPT>var up = 1;</SCRIPT><p ONCLICK="go()">x</p>'
    out = extract_scripts_from_html("p.html", text)
    kinds = sorted(u.kind.name for u in out.units)
    assert kinds == ["HTML_INLINE_HANDLER", "HTML_SCRIPT_BLOCK"]


def test_unquoted_attribute_value():
    text = "<img onerror=alert(1) src=x.png>"
    out = extract_scripts_from_html("p.html", text)
    assert [u.text for u in out.units] == ["alert(1)"]


def test_empty_page_yields_nothing():
    out = extract_scripts_from_html("p.html", "<html><body>hi</body></html>")
    assert out.units == [] and out.external_scripts == [] and out.js_urls == []
