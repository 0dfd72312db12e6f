// Homework
public class Strings98 {
  public static int safeParse(String line) {
    try {
      return Integer.parseInt(line.trim());
    } catch (NumberFormatException e) {
      System.out.println("Not a number: " + e.getMessage());
      return 0;
    }
  }

  public static void printTriangle(int size) {
    for (int row = 1; row <= size; row++) {
      for (int col = 0; col < row; col++) {
        System.out.print("*");
      }
      System.out.println();
    }
  }

  public static double bodyMassIndex(double kg, double meters) {
    double value = kg / Math.pow(meters, 2);
    return Math.round(value * 10) / 10.0;
  }

  public static void main(String[] args) {
    int parsed = safeParse("42");
    System.out.println(parsed);
    printTriangle(3);
    System.out.println("BMI: " + bodyMassIndex(89.5, 1.69));
  }
}
