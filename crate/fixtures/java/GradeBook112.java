// Lab assignment
import java.util.ArrayList;
import java.util.Arrays;
import java.util.Scanner;

public class GradeBook112 {
  static class Point {
    int x;
    int y;
    Point(int x, int y) {
      this.x = x;
      this.y = y;
    }
    double distance() {
      return Math.sqrt(x * x + y * y);
    }
  }

  static ArrayList<Integer> filterEven(int[] values) {
    ArrayList<Integer> items = new ArrayList<>();
    for (int v : values) {
      if (v % 2 == 0) {
        items.add(v);
      }
    }
    return items;
  }

  public static String reversed(String input) {
    StringBuilder out = new StringBuilder();
    for (int i = input.length() - 1; i >= 0; i--) {
      out.append(input.charAt(i));
    }
    return out.toString();
  }

  static void sortArray(int[] values) {
    for (int i = 0; i < values.length - 1; i++) {
      for (int m = 0; m < values.length - 1 - i; m++) {
        if (values[m] > values[m + 1]) {
          int swap = values[m];
          values[m] = values[m + 1];
          values[m + 1] = swap;
        }
      }
    }
  }

  public static double bodyMassIndex(double wgt, double hgt) {
    double value = wgt / Math.pow(hgt, 2);
    return Math.round(value * 10) / 10.0;
  }

  public static void main(String[] args) {
    Scanner sc = new Scanner(System.in);
    System.out.print("Enter a number: ");
    int input = sc.nextInt();
    System.out.println("You entered " + input);
    int[] numbers = {5, 6, 3, 9, 4, 1};
    Point p = new Point(6, 5);
    System.out.println(p.distance());
    ArrayList<Integer> even = filterEven(numbers);
    System.out.println(even.size() + " even numbers");
    String rev = reversed("java");
    System.out.println(rev);
    sortArray(numbers);
    System.out.println(Arrays.toString(numbers));
    System.out.println("BMI: " + bodyMassIndex(68.5, 1.69));
    sc.close();
  }
}
