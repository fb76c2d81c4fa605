from setuptools import setup, find_packages

setup(
    name="uivd-kernel",
    version="0.1.0",
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    install_requires=[
        "fastmcp>=2.0.0",
        "pydantic>=2.0.0",
        "networkx>=2.8"
    ],
    entry_points={
        'console_scripts': [
            'uivd=uivd.cli:main',
            'uivd-mcp-server=uivd.uivd_mcp:main',
        ],
    },
    python_requires=">=3.8",
)
