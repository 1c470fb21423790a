"""Render command outcomes as text or as structured JSON."""

import json

from typing_extensions import Literal, TypeAlias, cast


OutputFormat: TypeAlias = Literal["text", "structured"]


def _text_lines(value: object, indent: int) -> list[str]:
    pad = "  " * indent

    match value:
        case dict():
            lines: list[str] = []
            table = cast("dict[str, object]", value)
            for key, item in sorted(table.items()):
                if isinstance(item, dict | list) and item:
                    lines.append(f"{pad}{key}:")
                    lines.extend(_text_lines(item, indent + 1))
                else:
                    lines.append(f"{pad}{key}: {_scalar(item)}")
            return lines
        case list():
            lines = []
            for item in cast("list[object]", value):
                if isinstance(item, dict | list) and item:
                    lines.append(f"{pad}-")
                    lines.extend(_text_lines(item, indent + 1))
                else:
                    lines.append(f"{pad}- {_scalar(item)}")
            return lines
        case _:
            return [f"{pad}{_scalar(value)}"]


def _scalar(value: object) -> str:
    match value:
        case bool():
            return "yes" if value else "no"
        case None:
            return "-"
        case dict() | list():
            return "(none)"
        case _:
            return str(value)


def render(
    title: str,
    status: str,
    payload: dict[str, object],
    fmt: OutputFormat,
    *,
    theorem: str | None = None,
) -> str:
    """Render an outcome; keys are sorted so output is reproducible.

    `theorem` names the result the command instantiates; it is the second
    line of text output and the `theorem` key of structured output.

    Examples:
        >>> print(render("demo", "verified", {"b": 1, "a": [True]}, "text"))
        demo: verified
        a:
          - yes
        b: 1
        >>> print(
        ...     render(
        ...         "demo", "verified", {"b": 1}, "structured", theorem="lemma"
        ...     )
        ... )
        {
          "command": "demo",
          "result": {
            "b": 1
          },
          "status": "verified",
          "theorem": "lemma"
        }

    """
    if fmt == "structured":
        document: dict[str, object] = {
            "command": title,
            "status": status,
            "result": payload,
        }
        if theorem is not None:
            document["theorem"] = theorem
        return json.dumps(
            document, indent=2, sort_keys=True, ensure_ascii=False
        )

    header = [f"{title}: {status}"]
    if theorem is not None:
        header.append(f"theorem: {theorem}")
    return "\n".join([*header, *_text_lines(payload, 0)])
