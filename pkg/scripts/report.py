import pandas as pd

# ======================
TABLE_COLUMN_LABELS = {
    "sweep": {
        "property": "Property",
        "graphs": "Graphs",
        "checks": "Checks",
        "mismatches": "Mismatches",
        "seconds": "Seconds",
    },
    "class_summary": {
        "member": "Member",
        "arrows": "Arrows",
        "lines": "Lines",
        "largest": "Largest",
        "edges": "Edges",
    },
}


def apply_column_labels(df, table_name):
    labels = TABLE_COLUMN_LABELS.get(table_name, {})
    return df.rename(columns={
        col: labels.get(col, col)
        for col in df.columns
    })


def smart_table(df, table_name) -> str:
    """Labelled plain-text rendering; floats to two decimals."""
    df_display = apply_column_labels(df.copy(), table_name)

    float_cols = df_display.select_dtypes(include=["floating"]).columns
    for col in float_cols:
        df_display[col] = df_display[col].map(lambda x: f"{x:,.2f}" if pd.notnull(x) else "")

    if df_display.empty:
        return "(empty)\n"
    return df_display.to_string(index=False) + "\n"
