"""Command line interface.

Exit codes: 0 success, 1 usage error, 2 data/load error, 3 analysis failure
in strict mode.
"""

from __future__ import annotations

import json
import sys
from typing import Optional

import click

from .analyzer import segment  # noqa: F401  (re-exported for scripts)
from .config import load_config
from .glosser import format_analysis, format_no_analysis
from .grapheme import KawinError, LoadError, Orthography, default_inventory
from .lexicon import load_lexicon, validate_lexicon
from .messages import catalog
from .orthography import convert as convert_text
from .orthography import detect_document
from .service import AnalyzeRequest, run_pipeline, serve, split_words

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_ANALYSIS = 3


class AnalysisFailure(KawinError):
    pass


def _config(config_path, **overrides):
    return load_config(config_path, **overrides)


@click.group()
@click.option("--config", "config_path", type=click.Path(exists=True), default=None,
              help="JSON config file.")
@click.option("--lang", "language", default=None, help="Interface language (es or arn).")
@click.pass_context
def cli(ctx, config_path, language):
    """Mapuzugun orthography and morphology tools."""
    ctx.ensure_object(dict)
    ctx.obj["config_path"] = config_path
    ctx.obj["language"] = language


@cli.command()
@click.argument("text", nargs=-1, required=True)
@click.pass_context
def detect(ctx, text):
    """Detect which orthography TEXT is written in."""
    phrase = " ".join(text)
    words = split_words(phrase)
    if not words:
        raise click.UsageError("no words in input")
    doc = detect_document(words)
    names = " ".join(o.value for o in sorted(doc.candidates, key=lambda o: o.value))
    suffix = ""
    if doc.unanimous:
        suffix = " (unanimous)"
    elif doc.conflict:
        suffix = " (conflict: words disagree)"
    click.echo(names + suffix)


@cli.command()
@click.option("--from", "source", required=True, help="Source orthography.")
@click.option("--to", "target", required=True, help="Target orthography.")
@click.argument("text", nargs=-1, required=True)
def convert(source, target, text):
    """Convert TEXT between orthographies."""
    result = convert_text(" ".join(text), source, target)
    click.echo(result.text)
    if result.lossy:
        click.echo(
            f"(lossy: {len(result.loss_notes)} phoneme(s) have no {result.target.value} grapheme)",
            err=True,
        )


@cli.command()
@click.option("--ortho", "input_orthography", default=None,
              help="Input orthography (skips detection).")
@click.option("--display", "display_orthography", default=None,
              help="Orthography used for the displayed morphemes.")
@click.option("--json", "as_json", is_flag=True, help="Emit the API JSON payload.")
@click.option("--english", is_flag=True, help="Add English glosses to the text output.")
@click.option("--strict", is_flag=True, help="Exit 3 when any word has no analysis.")
@click.option("--max-segmentations", type=int, default=None)
@click.argument("text", nargs=-1, required=True)
@click.pass_context
def analyze(ctx, input_orthography, display_orthography, as_json, english, strict,
            max_segmentations, text):
    """Detect, convert, segment and gloss TEXT."""
    cfg = _config(ctx.obj.get("config_path"),
                  message_language=ctx.obj.get("language"))
    inventory = default_inventory()
    lexicon = load_lexicon(cfg.resolved_data_dir(), inventory)
    req = AnalyzeRequest(
        text=" ".join(text),
        input_orthography=Orthography.parse(input_orthography) if input_orthography else None,
        display_orthography=Orthography.parse(display_orthography) if display_orthography else None,
        max_segmentations=max_segmentations,
    )
    payload = run_pipeline(req, lexicon, inventory, cfg)
    if as_json:
        click.echo(json.dumps(payload, ensure_ascii=False, indent=2, sort_keys=True))
    else:
        strings = catalog(cfg.message_language)
        click.echo(f"{strings['detected']}: {payload['orthography']['resolved']}")
        for word in payload["words"]:
            click.echo("")
            conv = ", ".join(
                f"{name}: {c['text']}" + (" (lossy)" if c["lossy"] else "")
                for name, c in word["conversions"].items()
            )
            click.echo(f"{word['word']}  [{conv}]")
            if not word["segmentations"]:
                for failure in word["failures"]:
                    click.echo(f"  [{failure['reason']}] {failure['detail']}")
                click.echo(f"  {strings['no_analysis']}")
                continue
            for analysis in word["segmentations"]:
                click.echo("  " + analysis["header"])
                width = max(len(line["surface"]) for line in analysis["lines"])
                for line in analysis["lines"]:
                    text_gloss = line["gloss_es"]
                    if line["tags"]:
                        text_gloss = " & ".join(line["tags"]) + " " + text_gloss
                    if english and line["gloss_en"]:
                        text_gloss += f" ({line['gloss_en']})"
                    click.echo(f"    {line['surface'].ljust(width)}  {text_gloss}")
            if word["truncated"]:
                click.echo(f"  ({strings['truncated']})")
    if strict and any(not w["segmentations"] for w in payload["words"]):
        raise AnalysisFailure("some words have no analysis")


@cli.group()
def lexicon():
    """Lexicon maintenance commands."""


@lexicon.command("check")
@click.argument("data_dir", type=click.Path(exists=True, file_okay=False))
def lexicon_check(data_dir):
    """Load DATA_DIR and report warnings."""
    lex = load_lexicon(data_dir)
    warnings = validate_lexicon(lex)
    for w in warnings:
        click.echo(f"warning: {w}")
    click.echo(
        f"ok: {len(lex.roots)} roots, {len(lex.suffixes)} suffixes, "
        f"{len(lex.glosses)} glosses, {len(lex.combinations)} combination rules, "
        f"{len(warnings)} warning(s)"
    )


@cli.command("serve")
@click.option("--port", type=int, default=None)
@click.option("--data", "data_dir", type=click.Path(exists=True, file_okay=False), default=None)
@click.option("--static", "static_dir", type=click.Path(exists=True, file_okay=False), default=None)
@click.pass_context
def serve_cmd(ctx, port, data_dir, static_dir):
    """Run the HTTP JSON service."""
    cfg = _config(
        ctx.obj.get("config_path"),
        port=port,
        data_dir=data_dir,
        static_dir=static_dir,
        message_language=ctx.obj.get("language"),
    )
    serve(cfg)


def main(argv: Optional[list] = None) -> int:
    try:
        cli.main(args=argv, standalone_mode=False, obj={})
        return EXIT_OK
    except click.UsageError as exc:
        click.echo(f"usage error: {exc.format_message()}", err=True)
        return EXIT_USAGE
    except click.ClickException as exc:
        exc.show()
        return EXIT_USAGE
    except click.exceptions.Abort:
        return EXIT_USAGE
    except AnalysisFailure as exc:
        click.echo(str(exc), err=True)
        return EXIT_ANALYSIS
    except (LoadError, OSError) as exc:
        click.echo(f"data error: {exc}", err=True)
        return EXIT_DATA
    except KawinError as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
