"""User-facing interface strings, in Spanish (default) and Mapuzugun.

Spanish is the default because beginners reported getting stuck on
Mapuzugun-only instructions; the Mapuzugun catalog is a toggle.
"""

MESSAGES = {
    "es": {
        "no_analysis": "Sin análisis: ninguna segmentación válida.",
        "specify_orthography": (
            "No se pudo determinar el alfabeto de forma única; "
            "indique uno (ragileo, unificado o azumchefe)."
        ),
        "empty_text": "El texto está vacío.",
        "too_long": "El texto supera el largo máximo permitido.",
        "detected": "Alfabeto detectado",
        "unanimous": "idéntico en los tres alfabetos",
        "conversions": "Conversiones",
        "segmentations": "Segmentaciones",
        "truncated": "lista truncada",
    },
    "arn": {
        "no_analysis": "Gelay chi azkintun: gelay kiñe küme wichulün.",
        "specify_orthography": "Zullige kiñe wirin azentun (ragileo, unificado kam azumchefe).",
        "empty_text": "Gelay chi wirin.",
        "too_long": "Rume fücha chi wirin.",
        "detected": "Pepikan wirin azentun",
        "unanimous": "ka femgechi kom wirin azentun mew",
        "conversions": "Welukan",
        "segmentations": "Wichulün",
        "truncated": "katrünagi chi rakin",
    },
}


def catalog(language: str) -> dict:
    return MESSAGES.get(language, MESSAGES["es"])
